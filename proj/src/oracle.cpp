#include "happy/oracle.hpp"

#include <limits>

#include "happy/errors.hpp"

namespace happy {

std::uint64_t extension_count(const Instance &inst) {
	std::uint64_t total = 1;
	const auto ell = static_cast<std::uint64_t>(inst.ell());
	for (Vertex v = 0; v < inst.n(); ++v) {
		if (inst.precoloring.is_precolored(v))
			continue;
		if (total > std::numeric_limits<std::uint64_t>::max() / ell)
			return std::numeric_limits<std::uint64_t>::max();
		total *= ell;
	}
	return total;
}

Solution solve_exact(const Instance &inst, std::uint64_t budget, OracleStats *stats) {
	inst.validate();
	const std::uint64_t total = extension_count(inst);
	if (total > budget)
		throw BudgetExceeded("oracle needs " + std::to_string(total) + " colorings, budget is " +
		                         std::to_string(budget),
		                     total);

	const auto free = inst.precoloring.uncolored();
	FullColoring c(inst.precoloring.raw());
	for (Vertex v : free)
		c[v] = 1;

	// Odometer over the uncolored vertices; the first vertex is the most
	// significant digit, so the first maximum met is lexicographically smallest.
	FullColoring best;
	std::int64_t best_value = -1;
	std::uint64_t visited = 0;
	while (true) {
		++visited;
		std::int64_t value = objective_value(inst, c);
		if (value > best_value) {
			best_value = value;
			best = c;
		}
		int pos = static_cast<int>(free.size()) - 1;
		while (pos >= 0 && c[free[pos]] == inst.ell()) {
			c[free[pos]] = 1;
			--pos;
		}
		if (pos < 0)
			break;
		++c[free[pos]];
	}
	if (stats)
		stats->colorings_enumerated = visited;
	return evaluate(inst, best);
}

bool decide_exact(const Instance &inst, std::uint64_t budget) {
	if (!inst.threshold)
		throw InputError("decision mode requires a threshold k");
	return solve_exact(inst, budget).value(inst.objective) >= *inst.threshold;
}

} // namespace happy
