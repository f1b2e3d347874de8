#include "happy/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "happy/cograph.hpp"
#include "happy/errors.hpp"
#include "happy/reductions.hpp"
#include "happy/vc_solver.hpp"
#include "happy/clique_solver.hpp"

namespace happy {

namespace {

// std distributions are implementation-defined; draw from the raw engine only.
class Rng {
public:
	explicit Rng(std::uint64_t seed) : eng_(seed) {}

	std::uint64_t below(std::uint64_t n) {
		// rejection sampling keeps the draw unbiased and portable
		const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
		                            std::numeric_limits<std::uint64_t>::max() % n;
		std::uint64_t x;
		do
			x = eng_();
		while (x >= limit);
		return x % n;
	}

	bool percent(int pct) { return static_cast<int>(below(100)) < pct; }

	template <typename T>
	void shuffle(std::vector<T> &v) {
		for (size_t i = v.size(); i > 1; --i)
			std::swap(v[i - 1], v[below(i)]);
	}

private:
	std::mt19937_64 eng_;
};

void require(bool ok, const std::string &what) {
	if (!ok)
		throw InputError("generator: " + what);
}

void add_edge(std::set<Edge> &edges, Vertex a, Vertex b) {
	edges.insert(a < b ? Edge{a, b} : Edge{b, a});
}

std::set<Edge> gnp(Rng &rng, int n, int pct) {
	std::set<Edge> edges;
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			if (rng.percent(pct))
				edges.insert({u, v});
	return edges;
}

std::set<Edge> random_tree(Rng &rng, int n) {
	std::set<Edge> edges;
	std::vector<Vertex> order(n);
	std::iota(order.begin(), order.end(), 0);
	rng.shuffle(order);
	for (int i = 1; i < n; ++i)
		add_edge(edges, order[i], order[rng.below(i)]);
	return edges;
}

std::set<Edge> random_cograph(Rng &rng, int n) {
	std::set<Edge> edges;
	std::vector<std::vector<Vertex>> pieces;
	for (Vertex v = 0; v < n; ++v)
		pieces.push_back({v});
	while (pieces.size() > 1) {
		size_t i = rng.below(pieces.size());
		size_t j = rng.below(pieces.size() - 1);
		if (j >= i)
			++j;
		if (rng.percent(50))
			for (Vertex a : pieces[i])
				for (Vertex b : pieces[j])
					add_edge(edges, a, b);
		pieces[i].insert(pieces[i].end(), pieces[j].begin(), pieces[j].end());
		pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(j));
	}
	return edges;
}

std::vector<bool> random_subset(Rng &rng, int n, int size) {
	std::vector<Vertex> order(n);
	std::iota(order.begin(), order.end(), 0);
	rng.shuffle(order);
	std::vector<bool> in(n, false);
	for (int i = 0; i < size; ++i)
		in[order[i]] = true;
	return in;
}

// Cover vertices form a random graph; every other vertex only touches the cover.
std::set<Edge> planted_vc(Rng &rng, const std::vector<bool> &cover, int pct) {
	const int n = static_cast<int>(cover.size());
	std::set<Edge> edges;
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			if ((cover[u] || cover[v]) && rng.percent(pct))
				edges.insert({u, v});
	return edges;
}

// Clique on the non-modulator vertices plus random edges at the modulator.
std::set<Edge> planted_clique(Rng &rng, const std::vector<bool> &modulator, int pct) {
	const int n = static_cast<int>(modulator.size());
	std::set<Edge> edges;
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			if ((!modulator[u] && !modulator[v]) || rng.percent(pct))
				edges.insert({u, v});
	return edges;
}

// Clique part plus an independent part with random cross edges.
std::set<Edge> split_graph(Rng &rng, const std::vector<bool> &in_clique, int pct) {
	const int n = static_cast<int>(in_clique.size());
	std::set<Edge> edges;
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v) {
			if (in_clique[u] && in_clique[v])
				edges.insert({u, v});
			else if ((in_clique[u] || in_clique[v]) && rng.percent(pct))
				edges.insert({u, v});
		}
	return edges;
}

std::set<Edge> bipartite(Rng &rng, const std::vector<bool> &side, int pct) {
	const int n = static_cast<int>(side.size());
	std::set<Edge> edges;
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			if (side[u] != side[v] && rng.percent(pct))
				edges.insert({u, v});
	return edges;
}

std::vector<Vertex> members(const std::vector<bool> &set) {
	std::vector<Vertex> out;
	for (Vertex v = 0; v < static_cast<Vertex>(set.size()); ++v)
		if (set[v])
			out.push_back(v);
	return out;
}

void check_promise(const std::string &model, const Graph &g, const std::vector<bool> &planted) {
	bool ok = true;
	if (model == "tree")
		ok = g.edge_count() == std::max(0, g.vertex_count() - 1);
	else if (model == "cograph")
		check_cotree(build_cotree(g), g);
	else if (model == "planted-vc")
		ok = is_vertex_cover(g, members(planted));
	else if (model == "planted-clique")
		ok = is_clique_modulator(g, members(planted));
	else if (model == "split")
		ok = is_split_partition(g, members(planted));
	else if (model == "bipartite")
		ok = is_bipartite(g);
	if (!ok)
		throw std::logic_error("generator broke the " + model + " promise");
}

} // namespace

const std::vector<std::string> &generator_models() {
	static const std::vector<std::string> models{"gnp",   "tree",           "cograph", "planted-vc",
	                                             "split", "planted-clique", "bipartite"};
	return models;
}

Instance generate(const std::string &model, std::uint64_t seed, const GenParams &p) {
	require(p.n >= 0 && p.n <= 100'000, "n must lie in 0..100000");
	require(p.ell >= 1 && p.ell <= 1'000'000, "ell must be positive");
	require(p.precolor_pct >= 0 && p.precolor_pct <= 100, "precolor percent must lie in 0..100");
	require(p.edge_pct >= 0 && p.edge_pct <= 100, "edge percent must lie in 0..100");
	require(!p.k || *p.k >= 0, "threshold must be nonnegative");
	if (model != "gnp" && model != "tree" && model != "cograph" && model != "bipartite")
		require(p.n <= 5000, "n too large for a dense model");

	Rng rng(seed);
	std::set<Edge> edges;
	std::vector<bool> planted; // the structure the model promises
	if (model == "gnp") {
		require(p.n <= 5000, "n too large for gnp");
		edges = gnp(rng, p.n, p.edge_pct);
	} else if (model == "tree") {
		edges = random_tree(rng, p.n);
	} else if (model == "cograph") {
		require(p.n <= 5000, "n too large for cograph");
		edges = random_cograph(rng, p.n);
	} else if (model == "planted-vc") {
		require(p.d >= 0 && p.d <= p.n, "d must lie in 0..n");
		planted = random_subset(rng, p.n, p.d);
		edges = planted_vc(rng, planted, p.edge_pct);
	} else if (model == "planted-clique") {
		require(p.d >= 0 && p.d <= p.n, "d must lie in 0..n");
		planted = random_subset(rng, p.n, p.d);
		edges = planted_clique(rng, planted, p.edge_pct);
	} else if (model == "split") {
		int clique = p.clique > 0 ? p.clique : p.n / 2;
		require(clique <= p.n, "clique size exceeds n");
		planted = random_subset(rng, p.n, clique);
		edges = split_graph(rng, planted, p.edge_pct);
	} else if (model == "bipartite") {
		require(p.n <= 5000, "n too large for bipartite");
		int left = p.left > 0 ? p.left : p.n / 2;
		require(left <= p.n, "left side exceeds n");
		planted = random_subset(rng, p.n, left);
		edges = bipartite(rng, planted, p.edge_pct);
	} else {
		throw InputError("generator: unknown model '" + model + "'");
	}

	std::vector<Color> colors(static_cast<size_t>(p.n), kUncolored);
	for (auto &c : colors)
		if (rng.percent(p.precolor_pct))
			c = static_cast<Color>(1 + rng.below(static_cast<std::uint64_t>(p.ell)));

	Instance inst;
	std::vector<Edge> list(edges.begin(), edges.end());
	inst.graph = Graph::from_edges(p.n, list);
	inst.precoloring = PartialColoring(std::move(colors), p.ell);
	inst.objective = p.objective;
	inst.threshold = p.k;
	inst.validate();
	check_promise(model, inst.graph, planted);
	return inst;
}

} // namespace happy
