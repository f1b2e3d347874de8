#pragma once

#include <string>
#include <vector>

#include "happy/graph.hpp"

namespace happy {

struct TreeDecomposition {
	std::vector<std::vector<Vertex>> bags; // each sorted ascending
	std::vector<std::pair<int, int>> tree_edges;

	int width() const;
};

/// Throws InvalidDecomposition naming the violated axiom (tree shape,
/// vertex coverage, edge coverage, connectedness).
void validate_decomposition(const TreeDecomposition &td, const Graph &g);

/// Min-fill elimination ordering, ties broken by lowest vertex id.
TreeDecomposition build_decomposition(const Graph &g);

/// PACE 2017 .td text: "s td <bags> <width+1> <n>", "b <id> <v...>", "<i> <j>".
/// Throws ParseError if the header's vertex count differs from expected_n.
TreeDecomposition parse_td(const std::string &text, int expected_n);
std::string write_td(const TreeDecomposition &td, int n);

enum class NodeKind { Leaf, IntroduceVertex, IntroduceEdge, Forget, Join };

struct NiceNode {
	NodeKind kind = NodeKind::Leaf;
	std::vector<Vertex> bag; // sorted
	Vertex vertex = -1;      // IntroduceVertex / Forget
	Edge edge;               // IntroduceEdge
	std::vector<int> children;
};

/// Rooted nice decomposition with introduce-edge nodes and an empty root bag.
struct NiceTreeDecomposition {
	std::vector<NiceNode> nodes;
	int root = -1;

	int width() const;
	/// Children precede parents.
	std::vector<int> post_order() const;
};

NiceTreeDecomposition make_nice(const TreeDecomposition &td, const Graph &g);

/// Checks the nice-form invariants against g; throws InvalidDecomposition.
void validate_nice(const NiceTreeDecomposition &ntd, const Graph &g);

} // namespace happy
