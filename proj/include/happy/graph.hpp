#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace happy {

using Vertex = int;
using Color = int;

/// Sentinel stored in a PartialColoring for vertices outside S.
inline constexpr Color kUncolored = 0;

struct Edge {
	Vertex u = 0;
	Vertex v = 0;

	auto operator<=>(const Edge &) const = default;
};

/// Simple undirected graph with sorted adjacency lists. Immutable once built.
class Graph {
public:
	Graph() = default;

	/// Edgeless graph on n vertices.
	explicit Graph(int n);

	/// Throws InputError on self-loops, duplicate edges or out-of-range endpoints.
	static Graph from_edges(int n, std::span<const Edge> edges);

	int vertex_count() const { return static_cast<int>(adj_.size()); }
	int edge_count() const { return edge_count_; }
	int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
	std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
	bool adjacent(Vertex u, Vertex v) const;

	/// All edges with u < v, sorted ascending.
	std::vector<Edge> edges() const;

	/// Subgraph on the same vertex set keeping only edges for which keep(u, v) holds.
	template <typename Pred>
	Graph filter_edges(Pred keep) const {
		std::vector<Edge> kept;
		for (const Edge &e : edges())
			if (keep(e.u, e.v))
				kept.push_back(e);
		return from_edges(vertex_count(), kept);
	}

	Graph complement() const;

	friend bool operator==(const Graph &, const Graph &) = default;

private:
	std::vector<std::vector<Vertex>> adj_;
	int edge_count_ = 0;
};

/// p : S -> [ell]. Vertices outside S hold kUncolored.
class PartialColoring {
public:
	PartialColoring() = default;
	PartialColoring(int n, int ell);
	/// `colors[v]` is kUncolored or in 1..ell; throws InputError otherwise.
	PartialColoring(std::vector<Color> colors, int ell);

	int ell() const { return ell_; }
	int vertex_count() const { return static_cast<int>(colors_.size()); }
	bool is_precolored(Vertex v) const { return colors_[v] != kUncolored; }
	Color color(Vertex v) const { return colors_[v]; }
	const std::vector<Color> &raw() const { return colors_; }

	void set(Vertex v, Color c);

	std::vector<Vertex> precolored() const;
	std::vector<Vertex> uncolored() const;
	/// Distinct colors used by p, ascending.
	std::vector<Color> used_colors() const;

	friend bool operator==(const PartialColoring &, const PartialColoring &) = default;

private:
	std::vector<Color> colors_;
	int ell_ = 1;
};

enum class Objective { HappyVertices, HappyEdges };

std::string to_string(Objective o);
Objective objective_from_string(const std::string &s);

struct Instance {
	Graph graph;
	PartialColoring precoloring;
	Objective objective = Objective::HappyVertices;
	std::optional<std::int64_t> threshold;

	int n() const { return graph.vertex_count(); }
	int m() const { return graph.edge_count(); }
	int ell() const { return precoloring.ell(); }

	/// Throws InputError if the precoloring and graph disagree in size or k is out of range.
	void validate() const;

	friend bool operator==(const Instance &, const Instance &) = default;
};

using FullColoring = std::vector<Color>;

struct Solution {
	FullColoring coloring;
	std::int64_t happy_vertices = 0;
	std::int64_t happy_edges = 0;
	std::vector<Vertex> happy_vertex_set;
	std::vector<Edge> happy_edge_set;

	std::int64_t value(Objective o) const {
		return o == Objective::HappyVertices ? happy_vertices : happy_edges;
	}
};

/// Vertices whose whole neighborhood shares their color. Isolated vertices are happy.
std::vector<Vertex> happy_vertices(const Graph &g, const FullColoring &c);
std::vector<Edge> happy_edges(const Graph &g, const FullColoring &c);

/// Count of happy vertices outside `ignored` (ignored[v] true means excluded).
std::int64_t count_happy_vertices(const Graph &g, const FullColoring &c,
                                  const std::vector<bool> &ignored = {});
std::int64_t count_happy_edges(const Graph &g, const FullColoring &c);

/// Colors used by p in N[v], ascending.
std::vector<Color> neighborhood_palette(const Graph &g, const PartialColoring &p, Vertex v);

/// Full evaluation; throws ExtensionViolation if c contradicts the precoloring.
Solution evaluate(const Instance &inst, const FullColoring &c);

/// Objective value of c, excluding ignored vertices for the vertex objective.
std::int64_t objective_value(const Instance &inst, const FullColoring &c,
                             const std::vector<bool> &ignored = {});

} // namespace happy
