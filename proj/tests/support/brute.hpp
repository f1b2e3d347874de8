#pragma once
// Test-only reference implementations. Deliberately naive and independent of the
// library's solvers: full enumeration, no pruning.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "happy/graph.hpp"
#include "happy/matching.hpp"

namespace brute {

using happy::Color;
using happy::Edge;
using happy::Graph;
using happy::Instance;
using happy::Objective;
using happy::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Graph &g) {
	const int n = g.vertex_count();
	std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
	for (const Edge &e : g.edges())
		a[e.u][e.v] = a[e.v][e.u] = true;
	return a;
}

/// Best objective value over all total colorings V -> [ell] that agree with p.
/// Odometer over the uncolored vertices, each coloring scored from scratch.
inline int best_value(const Instance &inst) {
	const int n = inst.n(), ell = inst.ell();
	const std::vector<Edge> edges = inst.graph.edges();
	std::vector<Vertex> free;
	std::vector<Color> c(n);
	for (int v = 0; v < n; ++v) {
		c[v] = inst.precoloring.color(v);
		if (c[v] == happy::kUncolored) {
			free.push_back(v);
			c[v] = 1;
		}
	}
	std::vector<bool> spoiled(n);
	int best = -1;
	while (true) {
		int value = 0;
		if (inst.objective == Objective::HappyEdges) {
			for (const Edge &e : edges)
				value += c[e.u] == c[e.v];
		} else {
			std::fill(spoiled.begin(), spoiled.end(), false);
			for (const Edge &e : edges)
				if (c[e.u] != c[e.v])
					spoiled[e.u] = spoiled[e.v] = true;
			value = static_cast<int>(std::count(spoiled.begin(), spoiled.end(), false));
		}
		best = std::max(best, value);
		size_t i = 0;
		while (i < free.size() && c[free[i]] == ell)
			c[free[i++]] = 1;
		if (i == free.size())
			break;
		++c[free[i]];
	}
	return best;
}

/// Max-weight assignment by trying every injective map of rows to columns.
/// Without saturation a row may stay unmatched.
inline std::int64_t best_matching(const std::vector<std::vector<std::int64_t>> &w, bool saturate) {
	const int rows = static_cast<int>(w.size());
	const int cols = rows == 0 ? 0 : static_cast<int>(w[0].size());
	std::int64_t best = -1;
	std::vector<int> pick(rows, -1);
	std::vector<bool> used(cols, false);
	auto rec = [&](auto &&self, int r, std::int64_t acc) -> void {
		if (r == rows) {
			best = std::max(best, acc);
			return;
		}
		if (!saturate)
			self(self, r + 1, acc);
		for (int j = 0; j < cols; ++j)
			if (!used[j]) {
				used[j] = true;
				self(self, r + 1, acc + w[r][j]);
				used[j] = false;
			}
	};
	rec(rec, 0, 0);
	return best;
}

inline bool subset_covers(const std::vector<std::vector<bool>> &adj, std::uint32_t mask) {
	const int n = static_cast<int>(adj.size());
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v)
			if (adj[u][v] && !(mask >> u & 1) && !(mask >> v & 1))
				return false;
	return true;
}

inline int min_vertex_cover(const Graph &g) {
	const auto adj = adjacency(g);
	int best = g.vertex_count();
	for (std::uint32_t mask = 0; mask < (1u << g.vertex_count()); ++mask)
		if (subset_covers(adj, mask))
			best = std::min(best, __builtin_popcount(mask));
	return best;
}

inline int min_clique_modulator(const Graph &g) {
	const auto adj = adjacency(g);
	const int n = g.vertex_count();
	int best = n;
	for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
		bool clique = true;
		for (int u = 0; u < n && clique; ++u)
			for (int v = u + 1; v < n; ++v)
				if (!(mask >> u & 1) && !(mask >> v & 1) && !adj[u][v])
					clique = false;
		if (clique)
			best = std::min(best, __builtin_popcount(mask));
	}
	return best;
}

/// True when no four vertices induce a path.
inline bool p4_free(const Graph &g) {
	const auto adj = adjacency(g);
	const int n = g.vertex_count();
	std::vector<int> q(4);
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b)
			for (int c = 0; c < n; ++c)
				for (int d = 0; d < n; ++d) {
					if (a == b || a == c || a == d || b == c || b == d || c == d)
						continue;
					if (adj[a][b] && adj[b][c] && adj[c][d] && !adj[a][c] && !adj[a][d] && !adj[b][d])
						return false;
				}
	return true;
}

/// Independent random instance with an exact edge probability in percent.
inline Instance random_instance(std::mt19937_64 &rng, int n, int ell, int edge_pct,
                                int precolor_pct, Objective obj) {
	std::vector<Edge> edges;
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v)
			if (static_cast<int>(rng() % 100) < edge_pct)
				edges.push_back({u, v});
	std::vector<Color> colors(n, happy::kUncolored);
	for (auto &c : colors)
		if (static_cast<int>(rng() % 100) < precolor_pct)
			c = static_cast<Color>(1 + rng() % ell);
	Instance inst;
	inst.graph = Graph::from_edges(n, edges);
	inst.precoloring = happy::PartialColoring(colors, ell);
	inst.objective = obj;
	return inst;
}

} // namespace brute
