#include "happy/reductions.hpp"

#include <stdexcept>

#include "happy/errors.hpp"

namespace happy {

FullColoring ReductionArtifact::pull_back(const FullColoring &produced_coloring) const {
	FullColoring c;
	for (const auto &copies_of_v : vertex_map)
		c.push_back(produced_coloring.at(copies_of_v.front()));
	return c;
}

bool is_bipartite(const Graph &g) {
	std::vector<int> side(static_cast<size_t>(g.vertex_count()), -1);
	for (Vertex s = 0; s < g.vertex_count(); ++s) {
		if (side[s] >= 0)
			continue;
		side[s] = 0;
		std::vector<Vertex> stack{s};
		while (!stack.empty()) {
			Vertex v = stack.back();
			stack.pop_back();
			for (Vertex u : g.neighbors(v)) {
				if (side[u] < 0) {
					side[u] = 1 - side[v];
					stack.push_back(u);
				} else if (side[u] == side[v]) {
					return false;
				}
			}
		}
	}
	return true;
}

bool is_split_partition(const Graph &g, const std::vector<Vertex> &clique) {
	std::vector<bool> in(static_cast<size_t>(g.vertex_count()), false);
	for (Vertex v : clique)
		in[v] = true;
	for (size_t i = 0; i < clique.size(); ++i)
		for (size_t j = i + 1; j < clique.size(); ++j)
			if (!g.adjacent(clique[i], clique[j]))
				return false;
	for (const Edge &e : g.edges())
		if (!in[e.u] && !in[e.v])
			return false;
	return true;
}

namespace {

void require_edge_objective(const Instance &inst, std::int64_t k) {
	inst.validate();
	if (inst.objective != Objective::HappyEdges)
		throw InputError("reductions apply to the happy-edge objective");
	if (k < 0 || k > inst.m())
		throw InputError("threshold k must lie in 0..m");
}

ReductionArtifact build_image(const Instance &inst, std::int64_t k, std::int64_t copies,
                              bool edge_clique) {
	const int n = inst.n();
	const auto edges = inst.graph.edges();
	const std::int64_t m = static_cast<std::int64_t>(edges.size());
	const auto block = static_cast<int>(copies * n);

	ReductionArtifact art;
	art.source = inst;
	art.m = m;
	art.k = k;
	art.copies = copies;
	art.k_prime = copies * (m + k);
	art.vertex_map.assign(static_cast<size_t>(n), {});
	for (std::int64_t t = 0; t < copies; ++t)
		for (Vertex v = 0; v < n; ++v)
			art.vertex_map[v].push_back(static_cast<Vertex>(t * n + v));

	std::vector<Edge> produced_edges;
	for (size_t i = 0; i < edges.size(); ++i) {
		Vertex b = block + static_cast<Vertex>(i);
		art.edge_map.push_back(b);
		for (Vertex a : art.vertex_map[edges[i].u])
			produced_edges.push_back({a, b});
		for (Vertex a : art.vertex_map[edges[i].v])
			produced_edges.push_back({a, b});
	}
	if (edge_clique)
		for (size_t i = 0; i < edges.size(); ++i)
			for (size_t j = i + 1; j < edges.size(); ++j)
				produced_edges.push_back({art.edge_map[i], art.edge_map[j]});

	const int total = block + static_cast<int>(m);
	std::vector<Color> colors(static_cast<size_t>(total), kUncolored);
	for (Vertex v = 0; v < n; ++v)
		for (Vertex a : art.vertex_map[v])
			colors[a] = inst.precoloring.color(v);

	art.produced.graph = Graph::from_edges(total, produced_edges);
	art.produced.precoloring = PartialColoring(std::move(colors), inst.ell());
	art.produced.objective = Objective::HappyEdges;
	art.produced.threshold = art.k_prime;
	return art;
}

} // namespace

ReductionArtifact to_bipartite_mhe(const Instance &inst, std::int64_t k) {
	require_edge_objective(inst, k);
	ReductionArtifact art = build_image(inst, k, 1, false);
	if (!is_bipartite(art.produced.graph))
		throw std::logic_error("bipartite reduction produced a non-bipartite graph");
	return art;
}

ReductionArtifact to_split_mhe(const Instance &inst, std::int64_t k, std::int64_t size_budget) {
	require_edge_objective(inst, k);
	const std::int64_t m = inst.m();
	const std::int64_t copies = m * (m - 1) / 2 + 1;
	const std::int64_t size = copies * inst.n() + m;
	if (size > size_budget)
		throw SizeBudgetExceeded("split image needs " + std::to_string(size) + " vertices, budget is " +
		                             std::to_string(size_budget),
		                         static_cast<std::uint64_t>(size));
	ReductionArtifact art = build_image(inst, k, copies, true);
	if (!is_split_partition(art.produced.graph, art.edge_map))
		throw std::logic_error("split reduction produced a non-split graph");
	return art;
}

} // namespace happy
