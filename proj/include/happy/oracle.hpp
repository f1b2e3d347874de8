#pragma once

#include <cstdint>

#include "happy/graph.hpp"

namespace happy {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct OracleStats {
	std::uint64_t colorings_enumerated = 0;
};

/// Number of extensions ell^|Q|, saturating at UINT64_MAX.
std::uint64_t extension_count(const Instance &inst);

/// Exhaustive search over every extension of the precoloring. Among optimal
/// colorings returns the lexicographically smallest color vector. Throws
/// BudgetExceeded when ell^|Q| > budget.
Solution solve_exact(const Instance &inst, std::uint64_t budget = kDefaultOracleBudget,
                     OracleStats *stats = nullptr);

/// optimum >= threshold. Requires inst.threshold.
bool decide_exact(const Instance &inst, std::uint64_t budget = kDefaultOracleBudget);

} // namespace happy
