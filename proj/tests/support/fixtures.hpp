#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "happy/graph.hpp"

namespace fixtures {

using namespace happy;

/// 0-based edges; colors[v] == 0 means uncolored.
inline Instance make(int n, std::initializer_list<std::pair<int, int>> edges,
                     std::vector<Color> colors, int ell,
                     Objective obj = Objective::HappyVertices) {
	std::vector<Edge> es;
	for (auto [u, v] : edges)
		es.push_back({std::min(u, v), std::max(u, v)});
	if (colors.empty())
		colors.assign(n, kUncolored);
	Instance inst;
	inst.graph = Graph::from_edges(n, es);
	inst.precoloring = PartialColoring(std::move(colors), ell);
	inst.objective = obj;
	return inst;
}

inline Graph complete(int n) {
	std::vector<Edge> es;
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v)
			es.push_back({u, v});
	return Graph::from_edges(n, es);
}

inline Graph path(int n) {
	std::vector<Edge> es;
	for (int v = 0; v + 1 < n; ++v)
		es.push_back({v, v + 1});
	return Graph::from_edges(n, es);
}

/// a-b-c with p(a)=1, p(c)=2, ell=2.
inline Instance p3(Objective obj = Objective::HappyVertices) {
	return make(3, {{0, 1}, {1, 2}}, {1, 0, 2}, 2, obj);
}

} // namespace fixtures
