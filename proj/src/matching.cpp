#include "happy/matching.hpp"

#include <limits>

#include "happy/errors.hpp"

namespace happy {

WeightMatrix WeightMatrix::from_rows(const std::vector<std::vector<std::int64_t>> &m) {
	WeightMatrix out(static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()));
	for (int i = 0; i < out.rows; ++i) {
		if (static_cast<int>(m[i].size()) != out.cols)
			throw InputError("weight matrix rows differ in length");
		for (int j = 0; j < out.cols; ++j)
			out.at(i, j) = m[i][j];
	}
	return out;
}

namespace {

// Minimum-cost assignment of every row (rows <= cols) by shortest augmenting
// paths with potentials. O(rows^2 * cols). Returns the optimal total cost.
std::int64_t min_cost_assignment(const std::vector<std::vector<std::int64_t>> &cost, int cols) {
	const int rows = static_cast<int>(cost.size());
	if (rows == 0)
		return 0;
	constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
	std::vector<std::int64_t> u(rows + 1, 0), v(cols + 1, 0);
	std::vector<int> match(cols + 1, 0), way(cols + 1, 0);
	for (int i = 1; i <= rows; ++i) {
		match[0] = i;
		int j0 = 0;
		std::vector<std::int64_t> minv(cols + 1, inf);
		std::vector<bool> used(cols + 1, false);
		do {
			used[j0] = true;
			int i0 = match[j0], j1 = 0;
			std::int64_t delta = inf;
			for (int j = 1; j <= cols; ++j) {
				if (used[j])
					continue;
				std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
				if (cur < minv[j]) {
					minv[j] = cur;
					way[j] = j0;
				}
				if (minv[j] < delta) {
					delta = minv[j];
					j1 = j;
				}
			}
			for (int j = 0; j <= cols; ++j) {
				if (used[j]) {
					u[match[j]] += delta;
					v[j] -= delta;
				} else {
					minv[j] -= delta;
				}
			}
			j0 = j1;
		} while (match[j0] != 0);
		do {
			int j1 = way[j0];
			match[j0] = match[j1];
			j0 = j1;
		} while (j0 != 0);
	}
	return -v[0];
}

// Best total weight for rows [first, rows) using only columns not in `taken`.
std::int64_t best_weight(const WeightMatrix &m, int first, const std::vector<bool> &taken,
                         std::int64_t max_w) {
	std::vector<int> free_cols;
	for (int j = 0; j < m.cols; ++j)
		if (!taken[j])
			free_cols.push_back(j);
	std::vector<std::vector<std::int64_t>> cost;
	for (int i = first; i < m.rows; ++i) {
		std::vector<std::int64_t> row;
		for (int j : free_cols)
			row.push_back(max_w - m.at(i, j));
		cost.push_back(std::move(row));
	}
	const auto n_rows = static_cast<std::int64_t>(cost.size());
	return n_rows * max_w - min_cost_assignment(cost, static_cast<int>(free_cols.size()));
}

} // namespace

MatchingResult max_weight_matching(const WeightMatrix &input, bool saturate_left) {
	if (saturate_left && input.rows > input.cols)
		throw SaturationImpossible("cannot saturate " + std::to_string(input.rows) + " rows with " +
		                           std::to_string(input.cols) + " columns");
	for (std::int64_t x : input.w)
		if (x < 0)
			throw InputError("negative matching weight");

	// Without saturation, pad with one zero-weight dummy column per row; a row
	// matched to a dummy is unmatched. Dummies sit after the real columns, so
	// the lexicographic rule prefers real columns.
	WeightMatrix m = input;
	if (!saturate_left) {
		m = WeightMatrix(input.rows, input.cols + input.rows);
		for (int i = 0; i < input.rows; ++i)
			for (int j = 0; j < input.cols; ++j)
				m.at(i, j) = input.at(i, j);
	}
	std::int64_t max_w = 0;
	for (std::int64_t x : m.w)
		max_w = std::max(max_w, x);

	std::vector<bool> taken(static_cast<size_t>(m.cols), false);
	const std::int64_t optimum = best_weight(m, 0, taken, max_w);

	// Fix rows one at a time to the smallest column that still admits an optimum.
	MatchingResult result;
	result.assignment.assign(static_cast<size_t>(m.rows), -1);
	std::int64_t acquired = 0;
	for (int i = 0; i < m.rows; ++i) {
		for (int j = 0; j < m.cols; ++j) {
			if (taken[j])
				continue;
			taken[j] = true;
			std::int64_t total = acquired + m.at(i, j) + best_weight(m, i + 1, taken, max_w);
			if (total == optimum) {
				result.assignment[i] = j < input.cols ? j : -1;
				acquired += m.at(i, j);
				break;
			}
			taken[j] = false;
		}
	}
	result.weight = optimum;
	return result;
}

} // namespace happy
