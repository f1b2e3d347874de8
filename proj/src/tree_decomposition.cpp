#include "happy/tree_decomposition.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "happy/errors.hpp"

namespace happy {

int TreeDecomposition::width() const {
	int w = -1;
	for (const auto &b : bags)
		w = std::max(w, static_cast<int>(b.size()) - 1);
	return w;
}

void validate_decomposition(const TreeDecomposition &td, const Graph &g) {
	const int nb = static_cast<int>(td.bags.size());
	const int n = g.vertex_count();
	if (nb == 0) {
		if (n > 0)
			throw InvalidDecomposition("vertex coverage: no bags for a nonempty graph");
		return;
	}
	if (static_cast<int>(td.tree_edges.size()) != nb - 1)
		throw InvalidDecomposition("tree shape: expected " + std::to_string(nb - 1) + " tree edges");
	std::vector<std::vector<int>> tadj(static_cast<size_t>(nb));
	for (auto [a, b] : td.tree_edges) {
		if (a < 0 || b < 0 || a >= nb || b >= nb || a == b)
			throw InvalidDecomposition("tree shape: bad tree edge");
		tadj[a].push_back(b);
		tadj[b].push_back(a);
	}
	std::vector<bool> seen(static_cast<size_t>(nb), false);
	std::vector<int> stack{0};
	seen[0] = true;
	int reached = 1;
	while (!stack.empty()) {
		int t = stack.back();
		stack.pop_back();
		for (int s : tadj[t])
			if (!seen[s]) {
				seen[s] = true;
				++reached;
				stack.push_back(s);
			}
	}
	if (reached != nb)
		throw InvalidDecomposition("tree shape: decomposition tree is disconnected");

	std::vector<std::vector<bool>> member(static_cast<size_t>(nb), std::vector<bool>(n, false));
	std::vector<int> bag_count(static_cast<size_t>(n), 0);
	for (int t = 0; t < nb; ++t)
		for (Vertex v : td.bags[t]) {
			if (v < 0 || v >= n)
				throw InvalidDecomposition("vertex coverage: bag holds unknown vertex");
			if (member[t][v])
				throw InvalidDecomposition("vertex coverage: vertex repeated inside a bag");
			member[t][v] = true;
			++bag_count[v];
		}
	for (Vertex v = 0; v < n; ++v)
		if (bag_count[v] == 0)
			throw InvalidDecomposition("vertex coverage: vertex " + std::to_string(v + 1) +
			                           " is in no bag");
	for (const Edge &e : g.edges()) {
		bool covered = false;
		for (int t = 0; t < nb && !covered; ++t)
			covered = member[t][e.u] && member[t][e.v];
		if (!covered)
			throw InvalidDecomposition("edge coverage: edge " + std::to_string(e.u + 1) + "-" +
			                           std::to_string(e.v + 1) + " is in no bag");
	}
	// In a tree the bags holding v are connected iff they span bag_count-1 tree edges.
	std::vector<int> inner_edges(static_cast<size_t>(n), 0);
	for (auto [a, b] : td.tree_edges)
		for (Vertex v : td.bags[a])
			if (member[b][v])
				++inner_edges[v];
	for (Vertex v = 0; v < n; ++v)
		if (inner_edges[v] != bag_count[v] - 1)
			throw InvalidDecomposition("connectedness: bags of vertex " + std::to_string(v + 1) +
			                           " are not connected");
}

TreeDecomposition build_decomposition(const Graph &g) {
	const int n = g.vertex_count();
	TreeDecomposition td;
	if (n == 0)
		return td;

	std::vector<std::set<Vertex>> fill(static_cast<size_t>(n));
	for (Vertex v = 0; v < n; ++v)
		fill[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());

	auto fill_in = [&](Vertex v) {
		int missing = 0;
		for (auto a = fill[v].begin(); a != fill[v].end(); ++a)
			for (auto b = std::next(a); b != fill[v].end(); ++b)
				if (!fill[*a].count(*b))
					++missing;
		return missing;
	};

	std::vector<bool> eliminated(static_cast<size_t>(n), false);
	std::vector<int> position(static_cast<size_t>(n), -1);
	std::vector<Vertex> order;
	for (int step = 0; step < n; ++step) {
		Vertex best = -1;
		int best_fill = 0;
		for (Vertex v = 0; v < n; ++v) {
			if (eliminated[v])
				continue;
			int f = fill_in(v);
			if (best < 0 || f < best_fill) {
				best = v;
				best_fill = f;
			}
		}
		std::vector<Vertex> bag(fill[best].begin(), fill[best].end());
		bag.push_back(best);
		std::sort(bag.begin(), bag.end());
		td.bags.push_back(bag);
		for (Vertex a : fill[best])
			for (Vertex b : fill[best])
				if (a != b)
					fill[a].insert(b);
		for (Vertex a : fill[best])
			fill[a].erase(best);
		fill[best].clear();
		eliminated[best] = true;
		position[best] = step;
		order.push_back(best);
	}

	// Bag i hangs below the bag of its earliest-eliminated later neighbor.
	int previous_root = -1;
	for (int i = 0; i < n; ++i) {
		Vertex v = order[i];
		int parent = -1;
		for (Vertex u : td.bags[i])
			if (u != v && (parent < 0 || position[u] < parent))
				parent = position[u];
		if (parent >= 0) {
			td.tree_edges.emplace_back(i, parent);
		} else {
			if (previous_root >= 0)
				td.tree_edges.emplace_back(previous_root, i);
			previous_root = i;
		}
	}
	return td;
}

TreeDecomposition parse_td(const std::string &text, int expected_n) {
	std::istringstream in(text);
	std::string line;
	int line_no = 0;
	bool have_header = false;
	int declared_bags = 0, declared_size = 0;
	TreeDecomposition td;
	std::vector<bool> defined;
	auto fail = [&](const std::string &what) { throw ParseError(line_no, what); };

	while (std::getline(in, line)) {
		++line_no;
		if (line.empty() || line[0] == 'c')
			continue;
		std::istringstream ls(line);
		if (line[0] == 's') {
			std::string s, kind;
			int n = 0;
			if (have_header)
				fail("duplicate header");
			if (!(ls >> s >> kind >> declared_bags >> declared_size >> n) || kind != "td")
				fail("malformed header, expected 's td <bags> <width+1> <n>'");
			if (declared_bags < 0 || declared_size < 0)
				fail("negative counts in header");
			if (n != expected_n)
				fail("header declares " + std::to_string(n) + " vertices, graph has " +
				     std::to_string(expected_n));
			have_header = true;
			td.bags.assign(static_cast<size_t>(declared_bags), {});
			defined.assign(static_cast<size_t>(declared_bags), false);
			continue;
		}
		if (!have_header)
			fail("content before 's td' header");
		if (line[0] == 'b') {
			std::string b;
			int id = 0;
			if (!(ls >> b >> id) || id < 1 || id > declared_bags)
				fail("bad bag id");
			if (defined[id - 1])
				fail("bag " + std::to_string(id) + " defined twice");
			defined[id - 1] = true;
			int v = 0;
			while (ls >> v) {
				if (v < 1 || v > expected_n)
					fail("vertex " + std::to_string(v) + " out of range");
				td.bags[id - 1].push_back(v - 1);
			}
			if (!ls.eof())
				fail("malformed bag line");
			std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
			continue;
		}
		int a = 0, b = 0;
		std::string extra;
		if (!(ls >> a >> b) || (ls >> extra))
			fail("malformed tree edge line");
		if (a < 1 || b < 1 || a > declared_bags || b > declared_bags)
			fail("tree edge references unknown bag");
		td.tree_edges.emplace_back(a - 1, b - 1);
	}
	if (!have_header)
		throw ParseError(line_no, "missing 's td' header");
	for (int i = 0; i < declared_bags; ++i)
		if (!defined[i])
			throw ParseError(line_no, "bag " + std::to_string(i + 1) + " never defined");
	if (td.width() + 1 != declared_size && !(declared_bags == 0 && declared_size == 0))
		throw ParseError(line_no, "declared bag size " + std::to_string(declared_size) +
		                              " does not match largest bag " + std::to_string(td.width() + 1));
	return td;
}

std::string write_td(const TreeDecomposition &td, int n) {
	std::ostringstream out;
	out << "s td " << td.bags.size() << ' ' << (td.width() + 1) << ' ' << n << '\n';
	for (size_t i = 0; i < td.bags.size(); ++i) {
		out << "b " << (i + 1);
		for (Vertex v : td.bags[i])
			out << ' ' << (v + 1);
		out << '\n';
	}
	for (auto [a, b] : td.tree_edges)
		out << (a + 1) << ' ' << (b + 1) << '\n';
	return out.str();
}

int NiceTreeDecomposition::width() const {
	int w = -1;
	for (const auto &node : nodes)
		w = std::max(w, static_cast<int>(node.bag.size()) - 1);
	return w;
}

std::vector<int> NiceTreeDecomposition::post_order() const {
	std::vector<int> out;
	if (root < 0)
		return out;
	std::vector<std::pair<int, bool>> stack{{root, false}};
	while (!stack.empty()) {
		auto [t, expanded] = stack.back();
		stack.pop_back();
		if (expanded) {
			out.push_back(t);
			continue;
		}
		stack.emplace_back(t, true);
		for (auto it = nodes[t].children.rbegin(); it != nodes[t].children.rend(); ++it)
			stack.emplace_back(*it, false);
	}
	return out;
}

namespace {

class NiceBuilder {
public:
	NiceBuilder(const TreeDecomposition &td, const Graph &g) : td_(td), g_(g) {}

	NiceTreeDecomposition run() {
		if (td_.bags.empty()) {
			add(NodeKind::Leaf, {}, -1, {}, {});
			out_.root = 0;
			return std::move(out_);
		}
		const int nb = static_cast<int>(td_.bags.size());
		tree_children_.assign(static_cast<size_t>(nb), {});
		std::vector<std::vector<int>> tadj(static_cast<size_t>(nb));
		for (auto [a, b] : td_.tree_edges) {
			tadj[a].push_back(b);
			tadj[b].push_back(a);
		}
		std::vector<bool> seen(static_cast<size_t>(nb), false);
		std::vector<int> stack{0};
		seen[0] = true;
		while (!stack.empty()) {
			int t = stack.back();
			stack.pop_back();
			std::sort(tadj[t].begin(), tadj[t].end());
			for (int s : tadj[t])
				if (!seen[s]) {
					seen[s] = true;
					tree_children_[t].push_back(s);
					stack.push_back(s);
				}
		}
		int top = build(0);
		out_.root = transition(top, {});
		if (introduced_.size() != static_cast<size_t>(g_.edge_count()))
			throw InvalidDecomposition("edge coverage: not every edge could be introduced");
		return std::move(out_);
	}

private:
	int add(NodeKind kind, std::vector<Vertex> bag, Vertex v, Edge e, std::vector<int> children) {
		NiceNode node;
		node.kind = kind;
		node.bag = std::move(bag);
		node.vertex = v;
		node.edge = e;
		node.children = std::move(children);
		out_.nodes.push_back(std::move(node));
		return static_cast<int>(out_.nodes.size()) - 1;
	}

	// Walks from `node` (with its bag) up to `target`: forget what leaves,
	// then introduce what arrives. Edges are introduced just below the forget
	// of their first-forgotten endpoint.
	int transition(int node, const std::vector<Vertex> &target) {
		std::vector<Vertex> bag = out_.nodes[node].bag;
		std::vector<Vertex> leaving, arriving;
		std::set_difference(bag.begin(), bag.end(), target.begin(), target.end(),
		                    std::back_inserter(leaving));
		std::set_difference(target.begin(), target.end(), bag.begin(), bag.end(),
		                    std::back_inserter(arriving));
		for (Vertex v : leaving) {
			for (Vertex u : bag) {
				if (u == v || !g_.adjacent(u, v))
					continue;
				Edge e{std::min(u, v), std::max(u, v)};
				if (introduced_.insert(e).second)
					node = add(NodeKind::IntroduceEdge, bag, -1, e, {node});
			}
			bag.erase(std::find(bag.begin(), bag.end(), v));
			node = add(NodeKind::Forget, bag, v, {}, {node});
		}
		for (Vertex v : arriving) {
			bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
			node = add(NodeKind::IntroduceVertex, bag, v, {}, {node});
		}
		return node;
	}

	int build(int t) {
		const auto &bag = td_.bags[t];
		std::vector<int> tops;
		for (int c : tree_children_[t])
			tops.push_back(transition(build(c), bag));
		if (tops.empty())
			return transition(add(NodeKind::Leaf, {}, -1, {}, {}), bag);
		int cur = tops[0];
		for (size_t i = 1; i < tops.size(); ++i)
			cur = add(NodeKind::Join, bag, -1, {}, {cur, tops[i]});
		return cur;
	}

	const TreeDecomposition &td_;
	const Graph &g_;
	std::vector<std::vector<int>> tree_children_;
	std::set<Edge> introduced_;
	NiceTreeDecomposition out_;
};

} // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition &td, const Graph &g) {
	validate_decomposition(td, g);
	TreeDecomposition sorted = td;
	for (auto &b : sorted.bags)
		std::sort(b.begin(), b.end());
	return NiceBuilder(sorted, g).run();
}

void validate_nice(const NiceTreeDecomposition &ntd, const Graph &g) {
	auto fail = [](const std::string &what) { throw InvalidDecomposition("nice form: " + what); };
	if (ntd.root < 0 || ntd.root >= static_cast<int>(ntd.nodes.size()))
		fail("missing root");
	if (!ntd.nodes[ntd.root].bag.empty())
		fail("root bag is not empty");
	std::set<Edge> introduced;
	std::vector<int> seen_vertex(static_cast<size_t>(g.vertex_count()), 0);
	auto order = ntd.post_order();
	if (order.size() != ntd.nodes.size())
		fail("unreachable nodes");
	for (int t : order) {
		const NiceNode &node = ntd.nodes[t];
		auto child_bag = [&](int i) -> const std::vector<Vertex> & {
			return ntd.nodes[node.children[i]].bag;
		};
		switch (node.kind) {
		case NodeKind::Leaf:
			if (!node.children.empty() || !node.bag.empty())
				fail("leaf must be childless with an empty bag");
			break;
		case NodeKind::IntroduceVertex: {
			if (node.children.size() != 1)
				fail("introduce node needs one child");
			auto expect = child_bag(0);
			if (std::binary_search(expect.begin(), expect.end(), node.vertex))
				fail("introduced vertex already in child bag");
			expect.insert(std::upper_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
			if (expect != node.bag)
				fail("introduce bag mismatch");
			++seen_vertex[node.vertex];
			break;
		}
		case NodeKind::Forget: {
			if (node.children.size() != 1)
				fail("forget node needs one child");
			auto expect = child_bag(0);
			auto it = std::find(expect.begin(), expect.end(), node.vertex);
			if (it == expect.end())
				fail("forgotten vertex not in child bag");
			expect.erase(it);
			if (expect != node.bag)
				fail("forget bag mismatch");
			break;
		}
		case NodeKind::IntroduceEdge:
			if (node.children.size() != 1 || child_bag(0) != node.bag)
				fail("introduce-edge node must copy its child's bag");
			if (!std::binary_search(node.bag.begin(), node.bag.end(), node.edge.u) ||
			    !std::binary_search(node.bag.begin(), node.bag.end(), node.edge.v))
				fail("introduced edge endpoints not in bag");
			if (!g.adjacent(node.edge.u, node.edge.v))
				fail("introduced edge not in graph");
			if (!introduced.insert(node.edge).second)
				fail("edge introduced twice");
			break;
		case NodeKind::Join:
			if (node.children.size() != 2 || child_bag(0) != node.bag || child_bag(1) != node.bag)
				fail("join children must share the join bag");
			break;
		}
	}
	if (introduced.size() != static_cast<size_t>(g.edge_count()))
		fail("some edge never introduced");
	for (Vertex v = 0; v < g.vertex_count(); ++v)
		if (seen_vertex[v] == 0)
			fail("vertex " + std::to_string(v + 1) + " never introduced");
}

} // namespace happy
