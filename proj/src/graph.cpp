#include "happy/graph.hpp"

#include <algorithm>

#include "happy/errors.hpp"

namespace happy {

Graph::Graph(int n) : adj_(static_cast<size_t>(n)) {
	if (n < 0)
		throw InputError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
	Graph g(n);
	for (const Edge &e : edges) {
		if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
			throw InputError("edge endpoint out of range");
		if (e.u == e.v)
			throw InputError("self-loop at vertex " + std::to_string(e.u + 1));
		g.adj_[e.u].push_back(e.v);
		g.adj_[e.v].push_back(e.u);
	}
	for (auto &nb : g.adj_) {
		std::sort(nb.begin(), nb.end());
		if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
			throw InputError("duplicate edge");
	}
	g.edge_count_ = static_cast<int>(edges.size());
	return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
	const auto &a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
	Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
	return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
	std::vector<Edge> out;
	out.reserve(static_cast<size_t>(edge_count_));
	for (Vertex u = 0; u < vertex_count(); ++u)
		for (Vertex v : adj_[u])
			if (u < v)
				out.push_back({u, v});
	return out;
}

Graph Graph::complement() const {
	std::vector<Edge> es;
	for (Vertex u = 0; u < vertex_count(); ++u)
		for (Vertex v = u + 1; v < vertex_count(); ++v)
			if (!adjacent(u, v))
				es.push_back({u, v});
	return from_edges(vertex_count(), es);
}

PartialColoring::PartialColoring(int n, int ell)
	: colors_(static_cast<size_t>(n), kUncolored), ell_(ell) {
	if (ell < 1)
		throw InputError("color budget must be positive");
}

PartialColoring::PartialColoring(std::vector<Color> colors, int ell)
	: colors_(std::move(colors)), ell_(ell) {
	if (ell < 1)
		throw InputError("color budget must be positive");
	for (size_t v = 0; v < colors_.size(); ++v)
		if (colors_[v] < 0 || colors_[v] > ell)
			throw InputError("color of vertex " + std::to_string(v + 1) + " out of range");
}

void PartialColoring::set(Vertex v, Color c) {
	if (c < 0 || c > ell_)
		throw InputError("color " + std::to_string(c) + " out of range 1.." + std::to_string(ell_));
	colors_[v] = c;
}

std::vector<Vertex> PartialColoring::precolored() const {
	std::vector<Vertex> out;
	for (Vertex v = 0; v < vertex_count(); ++v)
		if (is_precolored(v))
			out.push_back(v);
	return out;
}

std::vector<Vertex> PartialColoring::uncolored() const {
	std::vector<Vertex> out;
	for (Vertex v = 0; v < vertex_count(); ++v)
		if (!is_precolored(v))
			out.push_back(v);
	return out;
}

std::vector<Color> PartialColoring::used_colors() const {
	std::vector<Color> out;
	for (Color c : colors_)
		if (c != kUncolored)
			out.push_back(c);
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

std::string to_string(Objective o) {
	return o == Objective::HappyVertices ? "vertices" : "edges";
}

Objective objective_from_string(const std::string &s) {
	if (s == "vertices")
		return Objective::HappyVertices;
	if (s == "edges")
		return Objective::HappyEdges;
	throw InputError("unknown objective '" + s + "' (expected vertices|edges)");
}

void Instance::validate() const {
	if (precoloring.vertex_count() != graph.vertex_count())
		throw InputError("precoloring size does not match vertex count");
	if (threshold) {
		std::int64_t limit = objective == Objective::HappyVertices ? n() : m();
		if (*threshold < 0 || *threshold > limit)
			throw InputError("threshold k out of range 0.." + std::to_string(limit));
	}
}

namespace {

void require_total(const Graph &g, const FullColoring &c) {
	if (static_cast<int>(c.size()) != g.vertex_count())
		throw InputError("coloring is not total: expected " + std::to_string(g.vertex_count()) +
		                 " colors, got " + std::to_string(c.size()));
	for (size_t v = 0; v < c.size(); ++v)
		if (c[v] < 1)
			throw InputError("coloring is not total: vertex " + std::to_string(v + 1) + " uncolored");
}

bool is_happy(const Graph &g, const FullColoring &c, Vertex v) {
	for (Vertex u : g.neighbors(v))
		if (c[u] != c[v])
			return false;
	return true;
}

} // namespace

std::vector<Vertex> happy_vertices(const Graph &g, const FullColoring &c) {
	require_total(g, c);
	std::vector<Vertex> out;
	for (Vertex v = 0; v < g.vertex_count(); ++v)
		if (is_happy(g, c, v))
			out.push_back(v);
	return out;
}

std::vector<Edge> happy_edges(const Graph &g, const FullColoring &c) {
	require_total(g, c);
	std::vector<Edge> out;
	for (const Edge &e : g.edges())
		if (c[e.u] == c[e.v])
			out.push_back(e);
	return out;
}

std::int64_t count_happy_vertices(const Graph &g, const FullColoring &c,
                                  const std::vector<bool> &ignored) {
	std::int64_t count = 0;
	for (Vertex v = 0; v < g.vertex_count(); ++v)
		if ((ignored.empty() || !ignored[v]) && is_happy(g, c, v))
			++count;
	return count;
}

std::int64_t count_happy_edges(const Graph &g, const FullColoring &c) {
	std::int64_t count = 0;
	for (Vertex u = 0; u < g.vertex_count(); ++u)
		for (Vertex v : g.neighbors(u))
			if (u < v && c[u] == c[v])
				++count;
	return count;
}

std::vector<Color> neighborhood_palette(const Graph &g, const PartialColoring &p, Vertex v) {
	std::vector<Color> out;
	if (p.is_precolored(v))
		out.push_back(p.color(v));
	for (Vertex u : g.neighbors(v))
		if (p.is_precolored(u))
			out.push_back(p.color(u));
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

Solution evaluate(const Instance &inst, const FullColoring &c) {
	require_total(inst.graph, c);
	for (Vertex v = 0; v < inst.n(); ++v) {
		if (c[v] > inst.ell())
			throw InputError("color of vertex " + std::to_string(v + 1) + " exceeds budget");
		if (inst.precoloring.is_precolored(v) && inst.precoloring.color(v) != c[v])
			throw ExtensionViolation(v);
	}
	Solution s;
	s.coloring = c;
	s.happy_vertex_set = happy_vertices(inst.graph, c);
	s.happy_edge_set = happy_edges(inst.graph, c);
	s.happy_vertices = static_cast<std::int64_t>(s.happy_vertex_set.size());
	s.happy_edges = static_cast<std::int64_t>(s.happy_edge_set.size());
	return s;
}

std::int64_t objective_value(const Instance &inst, const FullColoring &c,
                             const std::vector<bool> &ignored) {
	if (inst.objective == Objective::HappyEdges)
		return count_happy_edges(inst.graph, c);
	return count_happy_vertices(inst.graph, c, ignored);
}

} // namespace happy
