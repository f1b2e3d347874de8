#include "happy/param_k.hpp"

#include <deque>
#include <stdexcept>

#include "happy/errors.hpp"

namespace happy {

namespace {

FullColoring fill_uncolored(const PartialColoring &p, Color a) {
	FullColoring c(p.raw());
	for (Color &x : c)
		if (x == kUncolored)
			x = a;
	return c;
}

// Each vertex of Q copies a colored neighbor, spreading breadth-first out of
// the precolored set; Q-components without a precolored vertex become color 1.
FullColoring propagate_colors(const Instance &inst) {
	const Graph &g = inst.graph;
	FullColoring c(inst.precoloring.raw());
	std::deque<Vertex> queue;
	for (Vertex v = 0; v < inst.n(); ++v)
		if (c[v] != kUncolored)
			queue.push_back(v);
	while (!queue.empty()) {
		Vertex v = queue.front();
		queue.pop_front();
		for (Vertex u : g.neighbors(v))
			if (c[u] == kUncolored) {
				c[u] = c[v];
				queue.push_back(u);
			}
	}
	for (Color &x : c)
		if (x == kUncolored)
			x = 1;
	return c;
}

void require(bool ok, const std::string &what) {
	if (!ok)
		throw InputError(what);
}

} // namespace

PreprocessOutcome preprocess_mhe_k(const Instance &inst, std::int64_t k) {
	inst.validate();
	require(inst.objective == Objective::HappyEdges, "edge preprocessing needs the edge objective");
	require(k >= 1, "threshold k must be positive");
	const Graph &g = inst.graph;
	const PartialColoring &p = inst.precoloring;
	PreprocessOutcome out;

	std::int64_t offset = 0;
	std::int64_t inner_q = 0;
	for (const Edge &e : g.edges()) {
		bool su = p.is_precolored(e.u), sv = p.is_precolored(e.v);
		if (su && sv && p.color(e.u) == p.color(e.v))
			++offset;
		if (!su && !sv)
			++inner_q;
	}
	out.trace.push_back("remove-happy-precolored-edges:" + std::to_string(offset));
	const std::int64_t rest = k - offset;
	if (rest <= 0) {
		out.trace.push_back("threshold-met-by-precolored-edges");
		out.result = ImmediateYes{fill_uncolored(p, 1)};
		return out;
	}
	if (inner_q >= rest) {
		out.trace.push_back("uncolored-edges-suffice");
		out.result = ImmediateYes{fill_uncolored(p, 1)};
		return out;
	}
	const auto q = p.uncolored();
	if (static_cast<std::int64_t>(q.size()) >= 2 * rest) {
		FullColoring c = propagate_colors(inst);
		if (count_happy_edges(g, c) >= k) {
			out.trace.push_back("many-uncolored-vertices");
			out.result = ImmediateYes{std::move(c)};
			return out;
		}
		out.trace.push_back("many-uncolored-vertices:witness-short");
	}

	Reduced red;
	red.instance.graph = g.filter_edges([&](Vertex u, Vertex v) {
		return !(p.is_precolored(u) && p.is_precolored(v));
	});
	red.instance.precoloring = p;
	red.instance.objective = Objective::HappyEdges;
	red.cover.cover = q;
	red.happy_offset = offset;
	out.trace.push_back("remove-unhappy-precolored-edges");
	out.result = std::move(red);
	return out;
}

PreprocessOutcome preprocess_mhv_kl(const Instance &inst, std::int64_t k) {
	inst.validate();
	require(inst.objective == Objective::HappyVertices, "vertex preprocessing needs the vertex objective");
	require(k >= 1, "threshold k must be positive");
	const Graph &g = inst.graph;
	const PartialColoring &p = inst.precoloring;
	const int ell = inst.ell();
	PreprocessOutcome out;

	// A vertex whose closed neighborhood carries two precolors is never happy.
	std::vector<bool> conflicted(static_cast<size_t>(inst.n()), false);
	std::vector<Color> sole(static_cast<size_t>(inst.n()), kUncolored);
	for (Vertex v = 0; v < inst.n(); ++v) {
		auto pal = neighborhood_palette(g, p, v);
		conflicted[v] = pal.size() >= 2;
		if (pal.size() == 1)
			sole[v] = pal[0];
	}

	std::vector<std::int64_t> class_size(static_cast<size_t>(ell) + 1, 0);
	std::int64_t free_any = 0, happy_candidates_q = 0;
	std::vector<std::int64_t> q_by_color(static_cast<size_t>(ell) + 1, 0);
	for (Vertex v = 0; v < inst.n(); ++v) {
		if (conflicted[v])
			continue;
		if (p.is_precolored(v)) {
			++class_size[p.color(v)];
		} else {
			++happy_candidates_q;
			if (sole[v] == kUncolored)
				++free_any;
			else
				++q_by_color[sole[v]];
		}
	}
	out.trace.push_back("classify-conflicted-vertices");

	for (Color a = 1; a <= ell; ++a)
		if (class_size[a] >= k) {
			out.trace.push_back("large-precolored-class:" + std::to_string(a));
			out.result = ImmediateYes{fill_uncolored(p, a)};
			return out;
		}
	if (happy_candidates_q >= ell * k) {
		Color best = 1;
		for (Color a = 2; a <= ell; ++a)
			if (q_by_color[a] > q_by_color[best])
				best = a;
		FullColoring c = fill_uncolored(p, best);
		if (q_by_color[best] + free_any < k || count_happy_vertices(g, c) < k)
			throw std::logic_error("vertex preprocessing: pigeonhole witness falls short");
		out.trace.push_back("many-unconflicted-uncolored:" + std::to_string(best));
		out.result = ImmediateYes{std::move(c)};
		return out;
	}

	Reduced red;
	red.instance.graph = g.filter_edges([&](Vertex u, Vertex v) {
		return !(conflicted[u] && conflicted[v]);
	});
	red.instance.precoloring = p;
	red.instance.objective = Objective::HappyVertices;
	for (Vertex v = 0; v < inst.n(); ++v)
		if (!conflicted[v])
			red.cover.cover.push_back(v);
	red.ignored = conflicted;
	out.trace.push_back("remove-edges-between-conflicted");
	out.result = std::move(red);
	return out;
}

KDecision decide_by_k(const Instance &inst, std::int64_t k) {
	KDecision d;
	const bool vertices = inst.objective == Objective::HappyVertices;
	if (k == 0) {
		d.outcome.trace.push_back("zero-threshold");
		d.outcome.result = ImmediateYes{fill_uncolored(inst.precoloring, 1)};
		d.solution = evaluate(inst, std::get<ImmediateYes>(d.outcome.result).witness);
		d.yes = true;
		return d;
	}
	d.outcome = vertices ? preprocess_mhv_kl(inst, k) : preprocess_mhe_k(inst, k);
	if (auto *yes = std::get_if<ImmediateYes>(&d.outcome.result)) {
		d.solution = evaluate(inst, yes->witness);
		if (d.solution.value(inst.objective) < k)
			throw std::logic_error("parameter-k preprocessing: witness below threshold");
		d.yes = true;
		return d;
	}
	const auto &red = std::get<Reduced>(d.outcome.result);
	// isolated vertices need no cover slot; dropping them shrinks the guess space
	VertexCoverCertificate cover;
	for (Vertex v : red.cover.cover)
		if (red.instance.graph.degree(v) > 0)
			cover.cover.push_back(v);
	std::int64_t reduced_value = 0;
	FullColoring c;
	if (vertices) {
		Solution s = solve_mhv_vc(red.instance, cover, red.ignored, &d.vc_stats);
		reduced_value = count_happy_vertices(red.instance.graph, s.coloring, red.ignored);
		c = s.coloring;
	} else {
		Solution s = solve_mhe_vc(red.instance, cover, &d.vc_stats);
		reduced_value = s.happy_edges;
		c = s.coloring;
	}
	d.solution = evaluate(inst, c);
	if (d.solution.value(inst.objective) != reduced_value + red.happy_offset)
		throw std::logic_error("parameter-k preprocessing: reduced value does not transfer");
	d.yes = reduced_value >= k - red.happy_offset;
	return d;
}

} // namespace happy
