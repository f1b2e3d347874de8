#include "happy/clique_solver.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "happy/errors.hpp"
#include "happy/matching.hpp"
#include "happy/partitions.hpp"
#include "happy/vc_solver.hpp"

namespace happy {

bool is_clique_modulator(const Graph &g, const std::vector<Vertex> &modulator) {
	std::vector<bool> in(static_cast<size_t>(g.vertex_count()), false);
	for (Vertex v : modulator) {
		if (v < 0 || v >= g.vertex_count())
			return false;
		in[v] = true;
	}
	for (Vertex u = 0; u < g.vertex_count(); ++u) {
		if (in[u])
			continue;
		for (Vertex v = u + 1; v < g.vertex_count(); ++v)
			if (!in[v] && !g.adjacent(u, v))
				return false;
	}
	return true;
}

CliqueModulatorCertificate make_clique_certificate(const Graph &g, std::vector<Vertex> modulator) {
	std::sort(modulator.begin(), modulator.end());
	modulator.erase(std::unique(modulator.begin(), modulator.end()), modulator.end());
	if (!is_clique_modulator(g, modulator))
		throw InputError("removing the modulator does not leave a clique");
	CliqueModulatorCertificate cert;
	cert.modulator = std::move(modulator);
	for (Vertex v = 0, i = 0; v < g.vertex_count(); ++v) {
		if (i < cert.size() && cert.modulator[i] == v)
			++i;
		else
			cert.clique.push_back(v);
	}
	return cert;
}

CliqueModulatorCertificate find_clique_modulator(const Graph &g, int bound) {
	try {
		return make_clique_certificate(g, find_vertex_cover(g.complement(), bound).cover);
	} catch (const BoundExceeded &) {
		throw BoundExceeded("no clique modulator of size <= " + std::to_string(bound), bound);
	}
}

namespace {

struct Best {
	FullColoring coloring;
	std::int64_t value = -1;

	void offer(const Graph &g, FullColoring c, bool vertices) {
		std::int64_t v = vertices ? count_happy_vertices(g, c) : count_happy_edges(g, c);
		if (v > value) {
			value = v;
			coloring = std::move(c);
		}
	}
};

// Colors X so that each guessed class H_i is happy: every vertex of
// H_i ∪ N(H_i) gets one color. `fixed` holds the colors already decided
// (precolors, plus the clique color in the monochromatic branch); everything
// left over gets `fill`.
class HappyClassSearch {
public:
	HappyClassSearch(const Instance &inst, const std::vector<Vertex> &modulator,
	                 std::vector<Color> fixed, Color fill, std::optional<Color> clique_color,
	                 CliqueStats &stats, Best &best)
		: inst_(inst), g_(inst.graph), x_(modulator), fixed_(std::move(fixed)), fill_(fill),
		  clique_color_(clique_color), stats_(stats), best_(best) {}

	void run() {
		const int d = static_cast<int>(x_.size());
		for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
			std::vector<Vertex> happy;
			for (int i = 0; i < d; ++i)
				if (mask & (1u << i))
					happy.push_back(x_[i]);
			const int h = static_cast<int>(happy.size());
			for_each_partition(h, std::min(inst_.ell(), h), [&](const std::vector<int> &blocks, int t) {
				std::vector<std::vector<Vertex>> classes(static_cast<size_t>(t));
				for (int i = 0; i < h; ++i)
					classes[blocks[i]].push_back(happy[i]);
				try_classes(classes);
				return true;
			});
		}
	}

private:
	void try_classes(const std::vector<std::vector<Vertex>> &classes) {
		++stats_.partition_guesses;
		const int t = static_cast<int>(classes.size());
		std::vector<int> owner(static_cast<size_t>(inst_.n()), -1);
		std::vector<std::vector<Vertex>> closed(static_cast<size_t>(t));
		std::vector<Color> color(static_cast<size_t>(t), kUncolored);
		for (int i = 0; i < t; ++i) {
			auto claim = [&](Vertex v) {
				if (owner[v] == i)
					return true;
				if (owner[v] >= 0)
					return false; // closed neighborhoods of two classes meet
				owner[v] = i;
				closed[i].push_back(v);
				return true;
			};
			for (Vertex v : classes[i]) {
				if (!claim(v))
					return;
				for (Vertex u : g_.neighbors(v))
					if (!claim(u))
						return;
			}
			for (Vertex v : closed[i]) {
				if (fixed_[v] == kUncolored)
					continue;
				if (color[i] != kUncolored && color[i] != fixed_[v])
					return; // class sees two precolors
				color[i] = fixed_[v];
			}
		}

		std::vector<bool> forced_color(static_cast<size_t>(inst_.ell()) + 1, false);
		std::vector<int> open;
		for (int i = 0; i < t; ++i) {
			if (color[i] == kUncolored)
				open.push_back(i);
			else
				forced_color[color[i]] = true;
		}
		std::vector<Color> pool;
		for (Color c = 1; c <= inst_.ell(); ++c)
			if (!forced_color[c])
				pool.push_back(c);
		if (open.size() > pool.size())
			return;

		// Unforced classes take distinct unused colors. In the monochromatic
		// branch one of them may instead take the clique color, which can
		// make clique vertices adjacent to it happy.
		std::vector<int> holder{-1};
		if (clique_color_ && !forced_color[*clique_color_])
			for (int i : open)
				holder.push_back(i);
		for (int special : holder) {
			std::vector<Color> assigned = color;
			auto next = pool.begin();
			bool enough = true;
			for (int i : open) {
				if (i == special) {
					assigned[i] = *clique_color_;
					continue;
				}
				while (next != pool.end() && clique_color_ && *next == *clique_color_ && special >= 0)
					++next;
				if (next == pool.end()) {
					enough = false;
					break;
				}
				assigned[i] = *next++;
			}
			if (!enough)
				continue;
			FullColoring c = fixed_;
			for (int i = 0; i < t; ++i)
				for (Vertex v : closed[i])
					c[v] = assigned[i];
			for (Color &col : c)
				if (col == kUncolored)
					col = fill_;
			best_.offer(g_, std::move(c), true);
		}
	}

	const Instance &inst_;
	const Graph &g_;
	const std::vector<Vertex> &x_;
	std::vector<Color> fixed_;
	Color fill_;
	std::optional<Color> clique_color_;
	CliqueStats &stats_;
	Best &best_;
};

void require_certificate(const Instance &inst, const CliqueModulatorCertificate &cert) {
	inst.validate();
	if (!is_clique_modulator(inst.graph, cert.modulator))
		throw InputError("supplied set is not a clique modulator");
}

// Optimal happy-edge coloring when every vertex outside `free_set` has a
// fixed color: guess the partition of free_set into color classes, force the
// classes holding a fixed vertex, and match the rest to unused colors.
void color_free_set(const Instance &inst, const std::vector<Vertex> &free_set,
                    const std::vector<Color> &fixed, CliqueStats &stats, Best &best) {
	const Graph &g = inst.graph;
	const int d = static_cast<int>(free_set.size());
	std::vector<int> part(static_cast<size_t>(inst.n()), -1);
	for_each_partition(d, std::min(inst.ell(), d), [&](const std::vector<int> &blocks, int t) {
		++stats.partition_guesses;
		std::vector<Color> color(static_cast<size_t>(t), kUncolored);
		for (int i = 0; i < d; ++i) {
			Vertex v = free_set[i];
			part[v] = blocks[i];
			if (fixed[v] == kUncolored)
				continue;
			if (color[blocks[i]] != kUncolored && color[blocks[i]] != fixed[v])
				return true;
			color[blocks[i]] = fixed[v];
		}
		std::vector<bool> used(static_cast<size_t>(inst.ell()) + 1, false);
		for (Color c : color) {
			if (c == kUncolored)
				continue;
			if (used[c])
				return true;
			used[c] = true;
		}
		std::vector<int> pending;
		for (int i = 0; i < t; ++i)
			if (color[i] == kUncolored)
				pending.push_back(i);
		std::vector<Color> free_colors;
		for (Color c = 1; c <= inst.ell(); ++c)
			if (!used[c])
				free_colors.push_back(c);
		if (pending.size() > free_colors.size())
			return true;
		if (!pending.empty()) {
			// w[i][j]: edges between part i and outside vertices of color j.
			std::vector<std::vector<std::int64_t>> gain(
				static_cast<size_t>(t), std::vector<std::int64_t>(static_cast<size_t>(inst.ell()) + 1, 0));
			for (Vertex v : free_set)
				for (Vertex u : g.neighbors(v))
					if (part[u] < 0)
						++gain[part[v]][fixed[u]];
			WeightMatrix w(static_cast<int>(pending.size()), static_cast<int>(free_colors.size()));
			for (size_t a = 0; a < pending.size(); ++a)
				for (size_t b = 0; b < free_colors.size(); ++b)
					w.at(static_cast<int>(a), static_cast<int>(b)) = gain[pending[a]][free_colors[b]];
			auto m = max_weight_matching(w, true);
			for (size_t a = 0; a < pending.size(); ++a)
				color[pending[a]] = free_colors[m.assignment[a]];
		}
		FullColoring c = fixed;
		for (Vertex v : free_set)
			c[v] = color[part[v]];
		best.offer(g, std::move(c), false);
		return true;
	});
}

} // namespace

Solution solve_mhv_clique(const Instance &inst, const CliqueModulatorCertificate &cert,
                          CliqueStats *stats) {
	require_certificate(inst, cert);
	const auto &p = inst.precoloring;
	CliqueStats local;
	Best best;

	Color fill = 1;
	for (Vertex v : cert.clique)
		if (p.is_precolored(v)) {
			fill = p.color(v);
			break;
		}
	HappyClassSearch(inst, cert.modulator, p.raw(), fill, std::nullopt, local, best).run();

	if (!cert.clique.empty()) {
		for (Color a = 1; a <= inst.ell(); ++a) {
			bool feasible = std::all_of(cert.clique.begin(), cert.clique.end(), [&](Vertex v) {
				return !p.is_precolored(v) || p.color(v) == a;
			});
			if (!feasible)
				continue;
			++local.clique_color_guesses;
			std::vector<Color> fixed = p.raw();
			for (Vertex v : cert.clique)
				fixed[v] = a;
			HappyClassSearch(inst, cert.modulator, fixed, a, a, local, best).run();
		}
	}
	if (best.value < 0)
		throw std::logic_error("clique search: no coloring produced");
	if (stats)
		*stats = local;
	return evaluate(inst, best.coloring);
}

Solution solve_mhe_clique(const Instance &inst, const CliqueModulatorCertificate &cert,
                          CliqueStats *stats) {
	require_certificate(inst, cert);
	const auto &p = inst.precoloring;
	const int d = cert.size();
	CliqueStats local;
	Best best;

	std::vector<Vertex> clique_free;
	for (Vertex v : cert.clique)
		if (!p.is_precolored(v))
			clique_free.push_back(v);

	if (static_cast<int>(clique_free.size()) <= d + 1) {
		std::vector<Vertex> enlarged = cert.modulator;
		enlarged.insert(enlarged.end(), clique_free.begin(), clique_free.end());
		std::sort(enlarged.begin(), enlarged.end());
		color_free_set(inst, enlarged, p.raw(), local, best);
	} else {
		const auto free_in_x = [&] {
			std::vector<Vertex> out;
			for (Vertex v : cert.modulator)
				if (!p.is_precolored(v))
					out.push_back(v);
			return out;
		}();
		const bool few_colors = static_cast<int>(p.used_colors().size()) <= d + 1;
		for (Color a = 1; a <= inst.ell(); ++a) {
			++local.clique_color_guesses;
			std::vector<Color> fixed = p.raw();
			for (Vertex v : clique_free)
				fixed[v] = a;
			color_free_set(inst, cert.modulator, fixed, local, best);
			if (!few_colors)
				continue;
			// Few colors: also try every coloring of X outright.
			FullColoring c = fixed;
			for (Vertex v : free_in_x)
				c[v] = 1;
			while (true) {
				++local.direct_colorings;
				best.offer(inst.graph, c, false);
				int pos = static_cast<int>(free_in_x.size()) - 1;
				while (pos >= 0 && c[free_in_x[pos]] == inst.ell())
					c[free_in_x[pos--]] = 1;
				if (pos < 0)
					break;
				++c[free_in_x[pos]];
			}
		}
	}
	if (best.value < 0)
		throw std::logic_error("clique search: no coloring produced");
	if (stats)
		*stats = local;
	return evaluate(inst, best.coloring);
}

Solution solve_clique(const Instance &inst, int bound, CliqueStats *stats) {
	auto cert = find_clique_modulator(inst.graph, bound);
	return inst.objective == Objective::HappyVertices ? solve_mhv_clique(inst, cert, stats)
	                                                  : solve_mhe_clique(inst, cert, stats);
}

} // namespace happy
