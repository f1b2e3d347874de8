#pragma once

#include <cstdint>
#include <vector>

#include "happy/graph.hpp"

namespace happy {

/// Output of an edge-objective hardness reduction. Produced vertex ids are
/// laid out as the vertex block first (copy-major when copies > 1), then one
/// vertex per source edge in canonical edge order.
struct ReductionArtifact {
	Instance source;
	Instance produced;
	std::vector<std::vector<Vertex>> vertex_map; // source vertex -> its copies
	std::vector<Vertex> edge_map;                // source edge index -> edge vertex
	std::int64_t m = 0;
	std::int64_t k = 0;
	std::int64_t k_prime = 0;
	std::int64_t copies = 1; // T for the split construction

	/// c(u) = c'(first copy of u).
	FullColoring pull_back(const FullColoring &produced_coloring) const;
};

/// Bipartite image: one vertex per source vertex and per source edge; k' = m + k.
ReductionArtifact to_bipartite_mhe(const Instance &inst, std::int64_t k);

inline constexpr std::int64_t kDefaultSplitSizeBudget = 100'000;

/// Split image: T = C(m,2) + 1 copies of every source vertex, edge vertices
/// forming a clique; k' = T (m + k). Throws SizeBudgetExceeded when the image
/// would have more than size_budget vertices.
ReductionArtifact to_split_mhe(const Instance &inst, std::int64_t k,
                               std::int64_t size_budget = kDefaultSplitSizeBudget);

bool is_bipartite(const Graph &g);

/// True iff `clique` induces a clique and its complement is independent.
bool is_split_partition(const Graph &g, const std::vector<Vertex> &clique);

} // namespace happy
