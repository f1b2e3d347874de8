#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "happy/graph.hpp"

namespace happy {

/// Integer-only generator knobs. Percentages are 0..100.
struct GenParams {
	int n = 8;
	int ell = 3;
	int precolor_pct = 30;
	int edge_pct = 40;     // gnp edge probability; cross-edge density for planted models
	int d = 3;             // planted-vc cover size, planted-clique modulator size
	int left = 0;          // bipartite side sizes; 0 splits n evenly
	int clique = 0;        // split / planted-clique clique size; 0 means n - d (or n/2 for split)
	Objective objective = Objective::HappyVertices;
	std::optional<std::int64_t> k;
};

/// gnp, tree, cograph, planted-vc, planted-clique, split, bipartite.
const std::vector<std::string> &generator_models();

/// Same (model, seed, params) gives the same instance on every platform.
/// Throws InputError on unknown models or out-of-range parameters.
Instance generate(const std::string &model, std::uint64_t seed, const GenParams &params);

} // namespace happy
