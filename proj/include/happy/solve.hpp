#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "happy/graph.hpp"
#include "happy/oracle.hpp"
#include "happy/tree_decomposition.hpp"

namespace happy {

enum class Algorithm { Oracle, Tw, Vc, Clique, Cograph, ParamK, Auto };

std::string to_string(Algorithm a);
/// Throws InputError for unknown names.
Algorithm algorithm_from_string(const std::string &s);

struct SolveOptions {
	std::optional<TreeDecomposition> td; // user-supplied, else min-fill
	int vc_bound = 12;
	int clique_bound = 10;
	int max_bag_for_tw = 16;             // auto rejects tw if (2 ell)^(w+1) passes kTableCap
	std::uint64_t oracle_budget = kDefaultOracleBudget;
	std::optional<std::int64_t> k;       // overrides the instance threshold
};

/// Auto refuses tw when the per-node table bound exceeds this.
inline constexpr std::uint64_t kTableCap = 50'000'000;

struct RunReport {
	std::string algorithm;
	int n = 0;
	int m = 0;
	int ell = 0;
	Objective objective = Objective::HappyVertices;
	std::int64_t value = 0;
	FullColoring coloring;
	std::int64_t millis = 0;
	std::vector<std::pair<std::string, std::int64_t>> counters;
	std::optional<std::int64_t> k;
	std::optional<bool> decision; // value >= k, set when a threshold is given
};

/// Runs the chosen algorithm and re-evaluates the witness before returning.
/// Throws NoApplicableAlgorithm when the input does not fit the algorithm.
RunReport solve(const Instance &inst, Algorithm alg, const SolveOptions &opts = {});

/// Key order: algorithm, n, m, ell, objective, value, coloring, millis, counters,
/// then k and decision in decision mode. Omitting timing writes millis as 0.
std::string report_json(const RunReport &r, bool with_timing = true);

} // namespace happy
