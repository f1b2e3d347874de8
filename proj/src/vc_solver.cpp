#include "happy/vc_solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "happy/errors.hpp"
#include "happy/matching.hpp"
#include "happy/partitions.hpp"

namespace happy {

bool is_vertex_cover(const Graph &g, const std::vector<Vertex> &cover) {
	std::vector<bool> in(static_cast<size_t>(g.vertex_count()), false);
	for (Vertex v : cover) {
		if (v < 0 || v >= g.vertex_count())
			return false;
		in[v] = true;
	}
	for (const Edge &e : g.edges())
		if (!in[e.u] && !in[e.v])
			return false;
	return true;
}

namespace {

// Branches on a maximum-degree vertex v: either v joins the cover or all of N(v) does.
bool cover_search(const Graph &g, std::vector<bool> &taken, int budget) {
	Vertex best = -1;
	int best_deg = 0;
	for (Vertex v = 0; v < g.vertex_count(); ++v) {
		if (taken[v])
			continue;
		int deg = 0;
		for (Vertex u : g.neighbors(v))
			if (!taken[u])
				++deg;
		if (deg > best_deg) {
			best = v;
			best_deg = deg;
		}
	}
	if (best < 0)
		return true;
	if (budget == 0)
		return false;

	taken[best] = true;
	if (cover_search(g, taken, budget - 1))
		return true;
	taken[best] = false;

	if (best_deg > budget || best_deg == 1)
		return false; // degree one: taking v is never worse than taking its neighbor
	std::vector<Vertex> added;
	for (Vertex u : g.neighbors(best))
		if (!taken[u]) {
			taken[u] = true;
			added.push_back(u);
		}
	if (cover_search(g, taken, budget - best_deg))
		return true;
	for (Vertex u : added)
		taken[u] = false;
	return false;
}

} // namespace

VertexCoverCertificate find_vertex_cover(const Graph &g, std::optional<int> bound) {
	VertexCoverCertificate cert;
	if (!bound) {
		std::vector<bool> in(static_cast<size_t>(g.vertex_count()), false);
		for (const Edge &e : g.edges())
			if (!in[e.u] && !in[e.v])
				in[e.u] = in[e.v] = true;
		for (Vertex v = 0; v < g.vertex_count(); ++v)
			if (in[v])
				cert.cover.push_back(v);
		return cert;
	}
	for (int k = 0; k <= *bound; ++k) {
		std::vector<bool> taken(static_cast<size_t>(g.vertex_count()), false);
		if (cover_search(g, taken, k)) {
			for (Vertex v = 0; v < g.vertex_count(); ++v)
				if (taken[v])
					cert.cover.push_back(v);
			return cert;
		}
	}
	throw BoundExceeded("no vertex cover of size <= " + std::to_string(*bound), *bound);
}

StarCheck check_star_conditions(const Instance &inst, const BehaviorGuess &guess) {
	const Graph &g = inst.graph;
	std::vector<int> part(static_cast<size_t>(inst.n()), -1);
	for (size_t i = 0; i < guess.parts.size(); ++i)
		for (Vertex v : guess.parts[i])
			part[v] = static_cast<int>(i);

	std::vector<std::vector<Color>> palette;
	for (Vertex v : guess.promised)
		palette.push_back(neighborhood_palette(g, inst.precoloring, v));

	auto fail = [](StarCondition c) { return StarCheck{false, c}; };
	for (const auto &pal : palette)
		if (pal.size() > 1)
			return fail(StarCondition::PaletteTooLarge);
	const size_t y = guess.promised.size();
	for (size_t a = 0; a < y; ++a)
		for (size_t b = a + 1; b < y; ++b)
			if (part[guess.promised[a]] == part[guess.promised[b]] && !palette[a].empty() &&
			    !palette[b].empty() && palette[a] != palette[b])
				return fail(StarCondition::PaletteMismatch);
	for (size_t a = 0; a < y; ++a)
		for (size_t b = a + 1; b < y; ++b) {
			Vertex u = guess.promised[a], v = guess.promised[b];
			if (part[u] == part[v])
				continue;
			auto nu = g.neighbors(u), nv = g.neighbors(v);
			std::vector<Vertex> common;
			std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
			                      std::back_inserter(common));
			if (!common.empty())
				return fail(StarCondition::SharedNeighbor);
		}
	for (Vertex v : guess.promised)
		for (Vertex u : g.neighbors(v))
			if (part[u] >= 0 && part[u] != part[v])
				return fail(StarCondition::CrossPartNeighbor);
	return {};
}

namespace {

void require_cover(const Instance &inst, const VertexCoverCertificate &cover) {
	inst.validate();
	if (!is_vertex_cover(inst.graph, cover.cover))
		throw InputError("supplied set is not a vertex cover");
}

// Per-partition data shared by every promised-set guess.
struct PartitionView {
	int parts = 0;
	std::vector<int> part;          // per vertex, -1 outside the cover
	std::vector<Color> forced;      // per part, from precolored members; 0 if none
	bool consistent = true;         // no part mixes precolors, no two parts share one
};

PartitionView view_partition(const Instance &inst, const std::vector<Vertex> &cover,
                             const std::vector<int> &blocks, int parts) {
	PartitionView pv;
	pv.parts = parts;
	pv.part.assign(static_cast<size_t>(inst.n()), -1);
	pv.forced.assign(static_cast<size_t>(parts), kUncolored);
	for (size_t i = 0; i < cover.size(); ++i) {
		Vertex v = cover[i];
		int b = blocks[i];
		pv.part[v] = b;
		if (!inst.precoloring.is_precolored(v))
			continue;
		Color c = inst.precoloring.color(v);
		if (pv.forced[b] != kUncolored && pv.forced[b] != c)
			pv.consistent = false;
		pv.forced[b] = c;
	}
	std::vector<bool> seen(static_cast<size_t>(inst.ell()) + 1, false);
	for (Color c : pv.forced) {
		if (c == kUncolored)
			continue;
		if (seen[c])
			pv.consistent = false;
		seen[c] = true;
	}
	return pv;
}

// Assigns distinct unused colors to the pending parts by max-weight matching.
// Returns false when fewer unused colors than pending parts remain.
bool color_pending_parts(int ell, std::vector<Color> &color_of_part,
                         const std::vector<std::vector<std::int64_t>> &gain, // [part][color]
                         std::int64_t *matched_weight,
                         std::map<std::pair<std::uint64_t, std::uint64_t>, MatchingResult> &cache) {
	std::vector<int> pending;
	std::vector<bool> used(static_cast<size_t>(ell) + 1, false);
	std::uint64_t pending_mask = 0, used_mask = 0;
	for (size_t i = 0; i < color_of_part.size(); ++i) {
		if (color_of_part[i] == kUncolored) {
			pending.push_back(static_cast<int>(i));
			pending_mask |= std::uint64_t{1} << i;
		} else {
			used[color_of_part[i]] = true;
			used_mask |= std::uint64_t{1} << (color_of_part[i] % 64);
		}
	}
	std::vector<Color> free_colors;
	for (Color c = 1; c <= ell; ++c)
		if (!used[c])
			free_colors.push_back(c);
	*matched_weight = 0;
	if (pending.empty())
		return true;
	if (pending.size() > free_colors.size())
		return false;

	const bool cacheable = ell < 64;
	auto key = std::make_pair(pending_mask, used_mask);
	MatchingResult result;
	auto hit = cacheable ? cache.find(key) : cache.end();
	if (hit != cache.end()) {
		result = hit->second;
	} else {
		WeightMatrix w(static_cast<int>(pending.size()), static_cast<int>(free_colors.size()));
		for (size_t a = 0; a < pending.size(); ++a)
			for (size_t b = 0; b < free_colors.size(); ++b)
				w.at(static_cast<int>(a), static_cast<int>(b)) = gain[pending[a]][free_colors[b]];
		result = max_weight_matching(w, true);
		if (cacheable)
			cache.emplace(key, result);
	}
	for (size_t a = 0; a < pending.size(); ++a)
		color_of_part[pending[a]] = free_colors[result.assignment[a]];
	*matched_weight = result.weight;
	return true;
}

class VertexObjectiveSearch {
public:
	VertexObjectiveSearch(const Instance &inst, const VertexCoverCertificate &cover,
	                      const IgnoredSet &ignored)
		: inst_(inst), g_(inst.graph), cover_(cover.cover), ignored_(ignored) {
		if (ignored_.empty())
			ignored_.assign(static_cast<size_t>(inst.n()), false);
		in_cover_.assign(static_cast<size_t>(inst.n()), false);
		for (Vertex v : cover_)
			in_cover_[v] = true;
		for (Vertex v = 0; v < inst.n(); ++v)
			palette_.push_back(neighborhood_palette(g_, inst.precoloring, v));
		const size_t d = cover_.size();
		share_.assign(d, std::vector<bool>(d, false));
		for (size_t a = 0; a < d; ++a)
			for (size_t b = a + 1; b < d; ++b) {
				auto na = g_.neighbors(cover_[a]), nb = g_.neighbors(cover_[b]);
				std::vector<Vertex> common;
				std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
				                      std::back_inserter(common));
				share_[a][b] = share_[b][a] = !common.empty();
			}
	}

	Solution run(VcStats *stats) {
		const int d = static_cast<int>(cover_.size());
		const int max_parts = std::min(inst_.ell(), d);
		for_each_partition(d, max_parts, [&](const std::vector<int> &blocks, int parts) {
			search_partition(blocks, parts);
			return true;
		});
		if (best_value_ < 0)
			throw std::logic_error("vertex cover search: no feasible behavior guess");
		if (stats) {
			stats->cover_size = d;
			stats->guesses_evaluated = evaluated_;
			stats->guesses_feasible = feasible_;
		}
		return evaluate(inst_, best_);
	}

private:
	void search_partition(const std::vector<int> &blocks, int parts) {
		view_ = view_partition(inst_, cover_, blocks, parts);
		cache_.clear();
		if (!view_.consistent) {
			++evaluated_; // the partition is rejected for every promised set at once
			return;
		}
		// Precolored, non-ignored independent vertices whose whole (nonempty)
		// neighborhood lies in one part: happy iff that part takes their color.
		gain_.assign(static_cast<size_t>(parts),
		             std::vector<std::int64_t>(static_cast<size_t>(inst_.ell()) + 1, 0));
		for (Vertex v = 0; v < inst_.n(); ++v) {
			if (in_cover_[v] || ignored_[v] || !inst_.precoloring.is_precolored(v))
				continue;
			int p = single_part(v);
			if (p >= 0)
				++gain_[p][inst_.precoloring.color(v)];
		}
		// Cover vertices that may be promised under this partition.
		eligible_.clear();
		for (size_t i = 0; i < cover_.size(); ++i) {
			Vertex v = cover_[i];
			if (ignored_[v] || palette_[v].size() > 1)
				continue;
			bool same_part = true;
			for (Vertex u : g_.neighbors(v))
				if (in_cover_[u] && view_.part[u] != view_.part[v])
					same_part = false;
			if (same_part)
				eligible_.push_back(static_cast<int>(i));
		}
		chosen_.clear();
		extend_promises(0);
	}

	// Every subset of eligible vertices satisfying the pairwise conditions.
	void extend_promises(size_t next) {
		evaluate_guess();
		for (size_t k = next; k < eligible_.size(); ++k) {
			int a = eligible_[k];
			bool compatible = true;
			for (int b : chosen_) {
				Vertex u = cover_[a], v = cover_[b];
				if (view_.part[u] == view_.part[v]) {
					if (!palette_[u].empty() && !palette_[v].empty() && palette_[u] != palette_[v])
						compatible = false;
				} else if (share_[a][b]) {
					compatible = false;
				}
			}
			if (!compatible)
				continue;
			chosen_.push_back(a);
			extend_promises(k + 1);
			chosen_.pop_back();
		}
	}

	int single_part(Vertex v) const {
		int p = -1;
		for (Vertex u : g_.neighbors(v)) {
			if (p >= 0 && view_.part[u] != p)
				return -1;
			p = view_.part[u];
		}
		return p;
	}

	void evaluate_guess() {
		++evaluated_;
		// Phase 1: part colors forced by precolored members or by promised
		// vertices that see a precolor.
		std::vector<Color> color_of_part = view_.forced;
		for (int a : chosen_) {
			Vertex v = cover_[a];
			if (palette_[v].empty())
				continue;
			Color j = palette_[v][0];
			Color &slot = color_of_part[view_.part[v]];
			if (slot != kUncolored && slot != j)
				return;
			slot = j;
		}
		std::vector<bool> seen(static_cast<size_t>(inst_.ell()) + 1, false);
		for (Color c : color_of_part) {
			if (c == kUncolored)
				continue;
			if (seen[c])
				return; // two parts would share a color
			seen[c] = true;
		}
		std::vector<bool> was_pending;
		for (Color c : color_of_part)
			was_pending.push_back(c == kUncolored);

		// Phase 2.
		std::int64_t matched = 0;
		if (!color_pending_parts(inst_.ell(), color_of_part, gain_, &matched, cache_))
			return;
		++feasible_;

		// Phase 3: the independent set.
		FullColoring c(static_cast<size_t>(inst_.n()), kUncolored);
		std::vector<int> promised_part(static_cast<size_t>(inst_.n()), -1);
		for (int a : chosen_)
			for (Vertex u : g_.neighbors(cover_[a]))
				promised_part[u] = view_.part[cover_[a]];
		for (Vertex v = 0; v < inst_.n(); ++v) {
			if (in_cover_[v]) {
				c[v] = color_of_part[view_.part[v]];
			} else if (inst_.precoloring.is_precolored(v)) {
				c[v] = inst_.precoloring.color(v);
			} else if (promised_part[v] >= 0) {
				c[v] = color_of_part[promised_part[v]];
			} else {
				int p = single_part(v);
				c[v] = p >= 0 ? color_of_part[p] : 1;
			}
		}

		for (int a : chosen_)
			for (Vertex u : g_.neighbors(cover_[a]))
				if (c[u] != c[cover_[a]])
					throw std::logic_error("vertex cover search: promised vertex left unhappy");
		std::int64_t realized = 0;
		for (Vertex v = 0; v < inst_.n(); ++v) {
			if (in_cover_[v] || ignored_[v] || !inst_.precoloring.is_precolored(v))
				continue;
			int p = single_part(v);
			if (p >= 0 && was_pending[p] && c[v] == color_of_part[p])
				++realized;
		}
		if (realized != matched)
			throw std::logic_error("vertex cover search: matching weight disagrees with coloring");

		std::int64_t value = count_happy_vertices(g_, c, ignored_);
		if (value > best_value_) {
			best_value_ = value;
			best_ = std::move(c);
		}
	}

	const Instance &inst_;
	const Graph &g_;
	const std::vector<Vertex> &cover_;
	IgnoredSet ignored_;
	std::vector<bool> in_cover_;
	std::vector<std::vector<Color>> palette_;
	std::vector<std::vector<bool>> share_;

	PartitionView view_;
	std::vector<std::vector<std::int64_t>> gain_;
	std::vector<int> eligible_, chosen_;
	std::map<std::pair<std::uint64_t, std::uint64_t>, MatchingResult> cache_;

	FullColoring best_;
	std::int64_t best_value_ = -1;
	std::uint64_t evaluated_ = 0, feasible_ = 0;
};

} // namespace

Solution solve_mhv_vc(const Instance &inst, const VertexCoverCertificate &cover,
                      const IgnoredSet &ignored, VcStats *stats) {
	require_cover(inst, cover);
	if (!ignored.empty() && static_cast<int>(ignored.size()) != inst.n())
		throw InputError("ignored set size does not match vertex count");
	return VertexObjectiveSearch(inst, cover, ignored).run(stats);
}

Solution solve_mhe_vc(const Instance &inst, const VertexCoverCertificate &cover, VcStats *stats) {
	require_cover(inst, cover);
	const Graph &g = inst.graph;
	const auto &x = cover.cover;
	const int d = static_cast<int>(x.size());
	std::vector<bool> in_cover(static_cast<size_t>(inst.n()), false);
	for (Vertex v : x)
		in_cover[v] = true;

	FullColoring best;
	std::int64_t best_value = -1;
	std::uint64_t evaluated = 0, feasible = 0;
	std::map<std::pair<std::uint64_t, std::uint64_t>, MatchingResult> cache;

	for_each_partition(d, std::min(inst.ell(), d), [&](const std::vector<int> &blocks, int parts) {
		++evaluated;
		PartitionView pv = view_partition(inst, x, blocks, parts);
		if (!pv.consistent)
			return true;
		// Edges from a part to precolored independent vertices, by their color.
		std::vector<std::vector<std::int64_t>> gain(
			static_cast<size_t>(parts), std::vector<std::int64_t>(static_cast<size_t>(inst.ell()) + 1, 0));
		for (Vertex v = 0; v < inst.n(); ++v) {
			if (in_cover[v] || !inst.precoloring.is_precolored(v))
				continue;
			for (Vertex u : g.neighbors(v))
				++gain[pv.part[u]][inst.precoloring.color(v)];
		}
		std::vector<Color> color_of_part = pv.forced;
		std::int64_t matched = 0;
		cache.clear();
		if (!color_pending_parts(inst.ell(), color_of_part, gain, &matched, cache))
			return true;
		++feasible;

		FullColoring c(static_cast<size_t>(inst.n()), kUncolored);
		std::vector<int> per_part(static_cast<size_t>(parts), 0);
		for (Vertex v = 0; v < inst.n(); ++v) {
			if (in_cover[v]) {
				c[v] = color_of_part[pv.part[v]];
				continue;
			}
			if (inst.precoloring.is_precolored(v)) {
				c[v] = inst.precoloring.color(v);
				continue;
			}
			std::fill(per_part.begin(), per_part.end(), 0);
			for (Vertex u : g.neighbors(v))
				++per_part[pv.part[u]];
			int arg = -1;
			for (int i = 0; i < parts; ++i)
				if (per_part[i] > 0 && (arg < 0 || per_part[i] > per_part[arg]))
					arg = i;
			c[v] = arg >= 0 ? color_of_part[arg] : 1;
		}
		std::int64_t value = count_happy_edges(g, c);
		if (value > best_value) {
			best_value = value;
			best = std::move(c);
		}
		return true;
	});
	if (best_value < 0)
		throw std::logic_error("vertex cover search: no feasible partition");
	if (stats) {
		stats->cover_size = d;
		stats->guesses_evaluated = evaluated;
		stats->guesses_feasible = feasible;
	}
	return evaluate(inst, best);
}

Solution solve_vc(const Instance &inst, int bound, VcStats *stats) {
	auto cover = find_vertex_cover(inst.graph, bound);
	return inst.objective == Objective::HappyVertices ? solve_mhv_vc(inst, cover, {}, stats)
	                                                  : solve_mhe_vc(inst, cover, stats);
}

} // namespace happy
