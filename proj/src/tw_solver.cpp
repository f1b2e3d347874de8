#include "happy/tw_solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "happy/errors.hpp"

namespace happy {

namespace {

using Key = std::uint64_t;
using Table = std::unordered_map<Key, std::int64_t>;

// Packs a bag coloring and promise mask: key = code(r) * 2^|bag| + S, where
// code(r) reads the colors (minus one) as base-ell digits, bag position 0 lowest.
struct BagState {
	std::vector<Color> colors;
	std::uint32_t promised = 0;
};

class Codec {
public:
	explicit Codec(int ell) : ell_(ell) {}

	BagState decode(Key key, size_t bag_size) const {
		BagState s;
		s.promised = static_cast<std::uint32_t>(key & ((Key{1} << bag_size) - 1));
		key >>= bag_size;
		s.colors.resize(bag_size);
		for (size_t i = 0; i < bag_size; ++i) {
			s.colors[i] = static_cast<Color>(key % ell_) + 1;
			key /= ell_;
		}
		return s;
	}

	Key encode(const BagState &s) const {
		Key code = 0;
		for (size_t i = s.colors.size(); i-- > 0;)
			code = code * ell_ + static_cast<Key>(s.colors[i] - 1);
		return (code << s.colors.size()) | s.promised;
	}

private:
	Key ell_;
};

std::uint32_t erase_bit(std::uint32_t mask, size_t pos) {
	std::uint32_t low = mask & ((1u << pos) - 1);
	std::uint32_t high = (mask >> (pos + 1)) << pos;
	return low | high;
}

std::uint32_t insert_bit(std::uint32_t mask, size_t pos, bool bit) {
	std::uint32_t low = mask & ((1u << pos) - 1);
	std::uint32_t high = (mask >> pos) << (pos + 1);
	return low | high | (bit ? (1u << pos) : 0u);
}

size_t position_of(const std::vector<Vertex> &bag, Vertex v) {
	return static_cast<size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

void check_capacity(const NiceTreeDecomposition &ntd, int ell) {
	// Keys must fit: ell^b * 2^b < 2^63 for the widest bag b.
	const int b = ntd.width() + 1;
	if (b > 31)
		throw BudgetExceeded("decomposition too wide for the DP", static_cast<std::uint64_t>(b));
	constexpr std::uint64_t kLimit = std::numeric_limits<std::int64_t>::max();
	const auto factor = 2 * static_cast<std::uint64_t>(ell);
	std::uint64_t space = 1;
	bool overflow = false;
	for (int i = 0; i < b && !overflow; ++i) {
		overflow = space > kLimit / factor;
		space *= factor;
	}
	if (overflow)
		throw BudgetExceeded("DP state space does not fit in 64-bit keys",
		                     std::numeric_limits<std::uint64_t>::max());
}

class TreewidthDp {
public:
	TreewidthDp(const Instance &inst, const NiceTreeDecomposition &ntd, bool vertex_objective)
		: inst_(inst), ntd_(ntd), vertices_(vertex_objective), codec_(inst.ell()) {}

	Solution run(TwStats *stats) {
		inst_.validate();
		validate_nice(ntd_, inst_.graph);
		check_capacity(ntd_, inst_.ell());

		const size_t count = ntd_.nodes.size();
		std::vector<Table> tables(count);
		choices_.assign(count, {});
		TwStats local;
		local.width = ntd_.width();
		local.nodes = static_cast<int>(count);

		for (int t : ntd_.post_order()) {
			const NiceNode &node = ntd_.nodes[t];
			switch (node.kind) {
			case NodeKind::Leaf:
				tables[t].emplace(0, 0);
				break;
			case NodeKind::IntroduceVertex:
				tables[t] = introduce_vertex(node, tables[node.children[0]]);
				break;
			case NodeKind::IntroduceEdge:
				tables[t] = introduce_edge(node, tables[node.children[0]]);
				break;
			case NodeKind::Forget:
				tables[t] = forget(t, node, tables[node.children[0]]);
				break;
			case NodeKind::Join:
				tables[t] = join(tables[node.children[0]], tables[node.children[1]]);
				break;
			}
			for (int c : node.children)
				Table().swap(tables[c]);
			local.max_table_entries = std::max<std::uint64_t>(local.max_table_entries, tables[t].size());
			local.total_table_entries += tables[t].size();
		}

		const Table &root = tables[ntd_.root];
		auto it = root.find(0);
		if (it == root.end())
			throw std::logic_error("treewidth DP: empty root table");
		FullColoring coloring = reconstruct();
		Solution sol = evaluate(inst_, coloring);
		const std::int64_t got = vertices_ ? sol.happy_vertices : sol.happy_edges;
		if (got != it->second)
			throw std::logic_error("treewidth DP: reconstructed coloring disagrees with table value");
		if (stats)
			*stats = local;
		return sol;
	}

private:
	Table introduce_vertex(const NiceNode &node, const Table &child) {
		const Vertex v = node.vertex;
		const size_t pos = position_of(node.bag, v);
		const size_t child_size = node.bag.size() - 1;
		const bool fixed = inst_.precoloring.is_precolored(v);
		const Color lo = fixed ? inst_.precoloring.color(v) : 1;
		const Color hi = fixed ? lo : inst_.ell();
		Table out;
		for (const auto &[key, value] : child) {
			BagState s = codec_.decode(key, child_size);
			for (Color a = lo; a <= hi; ++a) {
				BagState n = s;
				n.colors.insert(n.colors.begin() + static_cast<long>(pos), a);
				// No edge at v is introduced below this node, so promising v
				// cannot conflict yet.
				for (int promise = 0; promise <= (vertices_ ? 1 : 0); ++promise) {
					n.promised = insert_bit(s.promised, pos, promise == 1);
					out.emplace(codec_.encode(n), value);
				}
			}
		}
		return out;
	}

	Table introduce_edge(const NiceNode &node, const Table &child) {
		const size_t pu = position_of(node.bag, node.edge.u);
		const size_t pv = position_of(node.bag, node.edge.v);
		Table out;
		for (const auto &[key, value] : child) {
			BagState s = codec_.decode(key, node.bag.size());
			bool same = s.colors[pu] == s.colors[pv];
			if (vertices_) {
				bool promised = ((s.promised >> pu) & 1u) || ((s.promised >> pv) & 1u);
				if (promised && !same)
					continue;
				out.emplace(key, value);
			} else {
				out.emplace(key, value + (same ? 1 : 0));
			}
		}
		return out;
	}

	Table forget(int t, const NiceNode &node, const Table &child) {
		const Vertex v = node.vertex;
		const auto &child_bag = ntd_.nodes[node.children[0]].bag;
		const size_t pos = position_of(child_bag, v);
		Table out;
		auto &choice = choices_[t];
		for (const auto &[key, value] : child) {
			BagState s = codec_.decode(key, child_bag.size());
			std::int64_t gain = ((s.promised >> pos) & 1u) ? 1 : 0;
			s.colors.erase(s.colors.begin() + static_cast<long>(pos));
			s.promised = erase_bit(s.promised, pos);
			Key parent = codec_.encode(s);
			std::int64_t candidate = value + gain;
			auto [it, inserted] = out.emplace(parent, candidate);
			if (inserted || candidate > it->second ||
			    (candidate == it->second && key < choice[parent])) {
				it->second = candidate;
				choice[parent] = key;
			}
		}
		return out;
	}

	static Table join(const Table &left, const Table &right) {
		Table out;
		for (const auto &[key, value] : left) {
			auto it = right.find(key);
			if (it != right.end())
				out.emplace(key, value + it->second);
		}
		return out;
	}

	FullColoring reconstruct() const {
		FullColoring c(static_cast<size_t>(inst_.n()), 0);
		std::vector<std::pair<int, Key>> stack{{ntd_.root, 0}};
		while (!stack.empty()) {
			auto [t, key] = stack.back();
			stack.pop_back();
			const NiceNode &node = ntd_.nodes[t];
			BagState s = codec_.decode(key, node.bag.size());
			for (size_t i = 0; i < node.bag.size(); ++i)
				c[node.bag[i]] = s.colors[i];
			switch (node.kind) {
			case NodeKind::Leaf:
				break;
			case NodeKind::IntroduceEdge:
				stack.emplace_back(node.children[0], key);
				break;
			case NodeKind::Join:
				stack.emplace_back(node.children[0], key);
				stack.emplace_back(node.children[1], key);
				break;
			case NodeKind::IntroduceVertex: {
				size_t pos = position_of(node.bag, node.vertex);
				s.colors.erase(s.colors.begin() + static_cast<long>(pos));
				s.promised = erase_bit(s.promised, pos);
				stack.emplace_back(node.children[0], codec_.encode(s));
				break;
			}
			case NodeKind::Forget:
				stack.emplace_back(node.children[0], choices_[t].at(key));
				break;
			}
		}
		return c;
	}

	const Instance &inst_;
	const NiceTreeDecomposition &ntd_;
	bool vertices_;
	Codec codec_;
	std::vector<std::unordered_map<Key, Key>> choices_;
};

} // namespace

Solution solve_mhv_tw(const Instance &inst, const NiceTreeDecomposition &ntd, TwStats *stats) {
	return TreewidthDp(inst, ntd, true).run(stats);
}

Solution solve_mhe_tw(const Instance &inst, const NiceTreeDecomposition &ntd, TwStats *stats) {
	return TreewidthDp(inst, ntd, false).run(stats);
}

Solution solve_tw(const Instance &inst, TwStats *stats) {
	auto ntd = make_nice(build_decomposition(inst.graph), inst.graph);
	return inst.objective == Objective::HappyVertices ? solve_mhv_tw(inst, ntd, stats)
	                                                  : solve_mhe_tw(inst, ntd, stats);
}

} // namespace happy
