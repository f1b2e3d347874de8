#include "happy/cograph.hpp"

#include <algorithm>
#include <stdexcept>

#include "happy/errors.hpp"

namespace happy {

std::vector<Vertex> Cotree::leaves(int node) const {
	std::vector<Vertex> out;
	std::vector<int> stack{node};
	while (!stack.empty()) {
		int t = stack.back();
		stack.pop_back();
		if (nodes[t].kind == CotreeKind::Leaf)
			out.push_back(nodes[t].vertex);
		for (int c : nodes[t].children)
			stack.push_back(c);
	}
	std::sort(out.begin(), out.end());
	return out;
}

namespace {

// Components of G[set] (complement = false) or of its complement; each sorted,
// ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph &g, const std::vector<Vertex> &set,
                                            bool complement) {
	std::vector<std::vector<Vertex>> out;
	std::vector<bool> done(set.size(), false);
	for (size_t s = 0; s < set.size(); ++s) {
		if (done[s])
			continue;
		std::vector<Vertex> comp;
		std::vector<size_t> stack{s};
		done[s] = true;
		while (!stack.empty()) {
			size_t i = stack.back();
			stack.pop_back();
			comp.push_back(set[i]);
			for (size_t j = 0; j < set.size(); ++j)
				if (!done[j] && g.adjacent(set[i], set[j]) != complement) {
					done[j] = true;
					stack.push_back(j);
				}
		}
		std::sort(comp.begin(), comp.end());
		out.push_back(std::move(comp));
	}
	return out;
}

// G[set] and its complement are both connected: some edge b-c has private
// neighbors a of b and d of c with a, d nonadjacent, giving the path a-b-c-d.
std::vector<Vertex> find_p4(const Graph &g, const std::vector<Vertex> &set) {
	for (Vertex b : set)
		for (Vertex c : set) {
			if (b == c || !g.adjacent(b, c))
				continue;
			for (Vertex a : set) {
				if (a == b || a == c || !g.adjacent(a, b) || g.adjacent(a, c))
					continue;
				for (Vertex d : set)
					if (d != a && d != b && d != c && g.adjacent(c, d) && !g.adjacent(b, d) &&
					    !g.adjacent(a, d))
						return {a, b, c, d};
			}
		}
	// Prime and P4-free cannot both hold; brute force as a fallback.
	for (Vertex a : set)
		for (Vertex b : set)
			for (Vertex c : set)
				for (Vertex d : set) {
					if (a == b || a == c || a == d || b == c || b == d || c == d)
						continue;
					if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) &&
					    !g.adjacent(a, c) && !g.adjacent(a, d) && !g.adjacent(b, d))
						return {a, b, c, d};
				}
	throw std::logic_error("cotree construction: prime module without induced P4");
}

int build(const Graph &g, const std::vector<Vertex> &set, Cotree &ct) {
	if (set.size() == 1) {
		ct.nodes.push_back({CotreeKind::Leaf, set[0], {}});
		return static_cast<int>(ct.nodes.size()) - 1;
	}
	CotreeKind kind = CotreeKind::Parallel;
	auto parts = components(g, set, false);
	if (parts.size() == 1) {
		kind = CotreeKind::Series;
		parts = components(g, set, true);
		if (parts.size() == 1)
			throw NotCograph(find_p4(g, set));
	}
	std::vector<int> children;
	for (const auto &part : parts)
		children.push_back(build(g, part, ct));
	ct.nodes.push_back({kind, -1, std::move(children)});
	return static_cast<int>(ct.nodes.size()) - 1;
}

} // namespace

Cotree build_cotree(const Graph &g) {
	Cotree ct;
	if (g.vertex_count() == 0)
		return ct;
	std::vector<Vertex> all(static_cast<size_t>(g.vertex_count()));
	for (Vertex v = 0; v < g.vertex_count(); ++v)
		all[v] = v;
	ct.root = build(g, all, ct);
	return ct;
}

void check_cotree(const Cotree &ct, const Graph &g) {
	const int n = g.vertex_count();
	if (n == 0) {
		if (ct.root >= 0)
			throw CotreeMismatch("cotree of the empty graph must be empty");
		return;
	}
	if (ct.root < 0 || ct.root >= static_cast<int>(ct.nodes.size()))
		throw CotreeMismatch("cotree has no root");
	std::vector<int> parent(ct.nodes.size(), -1), depth(ct.nodes.size(), 0), leaf_of(static_cast<size_t>(n), -1);
	std::vector<int> stack{ct.root};
	size_t visited = 0;
	while (!stack.empty()) {
		int t = stack.back();
		stack.pop_back();
		++visited;
		const CotreeNode &node = ct.nodes[t];
		if (node.kind == CotreeKind::Leaf) {
			if (node.vertex < 0 || node.vertex >= n || leaf_of[node.vertex] >= 0)
				throw CotreeMismatch("cotree leaves do not match the vertex set");
			leaf_of[node.vertex] = t;
		} else if (node.children.size() < 2) {
			throw CotreeMismatch("internal cotree node with fewer than two children");
		}
		for (int c : node.children) {
			if (c < 0 || c >= static_cast<int>(ct.nodes.size()) || parent[c] >= 0 || c == ct.root)
				throw CotreeMismatch("cotree is not a tree");
			parent[c] = t;
			depth[c] = depth[t] + 1;
			stack.push_back(c);
		}
	}
	if (visited != ct.nodes.size())
		throw CotreeMismatch("cotree has unreachable nodes");
	for (Vertex v = 0; v < n; ++v)
		if (leaf_of[v] < 0)
			throw CotreeMismatch("vertex " + std::to_string(v + 1) + " missing from cotree");
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v) {
			int a = leaf_of[u], b = leaf_of[v];
			while (depth[a] > depth[b])
				a = parent[a];
			while (depth[b] > depth[a])
				b = parent[b];
			while (a != b) {
				a = parent[a];
				b = parent[b];
			}
			bool series = ct.nodes[a].kind == CotreeKind::Series;
			if (series != g.adjacent(u, v))
				throw CotreeMismatch("cotree disagrees with adjacency of " + std::to_string(u + 1) +
				                     " and " + std::to_string(v + 1));
		}
}

Solution solve_mhv_cograph(const Instance &inst, const Cotree &ct, CographStats *stats) {
	inst.validate();
	if (inst.objective != Objective::HappyVertices)
		throw InputError("the cograph algorithm handles the vertex objective only");
	check_cotree(ct, inst.graph);
	const PartialColoring &p = inst.precoloring;
	FullColoring c(p.raw());
	CographStats local;

	std::vector<int> comps;
	if (ct.root >= 0) {
		if (ct.nodes[ct.root].kind == CotreeKind::Parallel)
			comps = ct.nodes[ct.root].children;
		else
			comps.push_back(ct.root);
	}
	for (int comp : comps) {
		++local.components;
		auto members = ct.leaves(comp);
		Color chosen = 1;
		if (members.size() > 1) {
			// val(a) = vertices whose closed-neighborhood precolors all equal a
			// (or are absent): exactly the happy ones once the rest is colored a.
			std::vector<std::int64_t> val(static_cast<size_t>(inst.ell()) + 1, 0);
			for (Vertex v : members) {
				auto pal = neighborhood_palette(inst.graph, p, v);
				if (pal.empty()) {
					for (Color a = 1; a <= inst.ell(); ++a)
						++val[a];
				} else if (pal.size() == 1) {
					++val[pal[0]];
				}
			}
			for (Color a = 2; a <= inst.ell(); ++a)
				if (val[a] > val[chosen])
					chosen = a;
		}
		for (Vertex v : members)
			if (c[v] == kUncolored)
				c[v] = chosen;
	}
	if (stats)
		*stats = local;
	return evaluate(inst, c);
}

} // namespace happy
