#pragma once

#include <vector>

#include "happy/graph.hpp"

namespace happy {

enum class CotreeKind { Leaf, Series, Parallel };

struct CotreeNode {
	CotreeKind kind = CotreeKind::Leaf;
	Vertex vertex = -1;         // leaves only
	std::vector<int> children;  // ordered by smallest leaf
};

/// Series nodes join their children, Parallel nodes take the disjoint union.
/// Canonical: internal nodes have >= 2 children and alternate in kind.
struct Cotree {
	std::vector<CotreeNode> nodes;
	int root = -1;

	std::vector<Vertex> leaves(int node) const;
};

/// Recursive decomposition: split into components, or into co-components when
/// the graph is connected. Throws NotCograph with an induced P4 otherwise.
Cotree build_cotree(const Graph &g);

/// Checks adjacency against the cotree for every vertex pair; throws CotreeMismatch.
void check_cotree(const Cotree &ct, const Graph &g);

struct CographStats {
	int components = 0;
};

/// Happy vertices on a cograph. In a connected cograph with at least two
/// vertices all happy vertices share one color a, so the optimum is the best
/// "color every uncolored vertex a" over a in 1..ell; components add up.
Solution solve_mhv_cograph(const Instance &inst, const Cotree &ct, CographStats *stats = nullptr);

} // namespace happy
