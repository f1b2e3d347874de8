#include "happy/solve.hpp"

#include <chrono>
#include "json.hpp"
#include <stdexcept>

#include "happy/clique_solver.hpp"
#include "happy/cograph.hpp"
#include "happy/errors.hpp"
#include "happy/param_k.hpp"
#include "happy/tw_solver.hpp"
#include "happy/vc_solver.hpp"

namespace happy {

namespace {

// Auto only takes FPT branches whose guess count stays practical.
constexpr int kAutoVcCap = 8;
constexpr int kAutoCliqueCap = 7;

struct Outcome {
	Solution solution;
	std::string name;
	std::vector<std::pair<std::string, std::int64_t>> counters;
};

std::int64_t as_i64(std::uint64_t x) { return static_cast<std::int64_t>(x); }

Outcome run_oracle(const Instance &inst, const SolveOptions &opts) {
	OracleStats st;
	Outcome o{solve_exact(inst, opts.oracle_budget, &st), "oracle", {}};
	o.counters = {{"colorings_enumerated", as_i64(st.colorings_enumerated)}};
	return o;
}

NiceTreeDecomposition nice_for(const Instance &inst, const SolveOptions &opts) {
	TreeDecomposition td = opts.td ? *opts.td : build_decomposition(inst.graph);
	if (opts.td) {
		try {
			validate_decomposition(td, inst.graph);
		} catch (const InvalidDecomposition &e) {
			throw InputError(std::string("supplied tree decomposition: ") + e.what());
		}
	}
	return make_nice(td, inst.graph);
}

Outcome run_tw(const Instance &inst, const SolveOptions &opts) {
	TwStats st;
	NiceTreeDecomposition ntd = nice_for(inst, opts);
	Solution s = inst.objective == Objective::HappyVertices ? solve_mhv_tw(inst, ntd, &st)
	                                                       : solve_mhe_tw(inst, ntd, &st);
	Outcome o{std::move(s), "tw", {}};
	o.counters = {{"width", st.width},
	              {"nodes", st.nodes},
	              {"max_table_entries", as_i64(st.max_table_entries)},
	              {"total_table_entries", as_i64(st.total_table_entries)}};
	return o;
}

Outcome run_vc(const Instance &inst, const SolveOptions &opts) {
	VcStats st;
	Outcome o{solve_vc(inst, opts.vc_bound, &st), "vc", {}};
	o.counters = {{"cover_size", st.cover_size},
	              {"guesses_evaluated", as_i64(st.guesses_evaluated)},
	              {"guesses_feasible", as_i64(st.guesses_feasible)}};
	return o;
}

Outcome run_clique(const Instance &inst, const SolveOptions &opts) {
	CliqueStats st;
	Outcome o{solve_clique(inst, opts.clique_bound, &st), "clique", {}};
	o.counters = {{"partition_guesses", as_i64(st.partition_guesses)},
	              {"clique_color_guesses", as_i64(st.clique_color_guesses)},
	              {"direct_colorings", as_i64(st.direct_colorings)}};
	return o;
}

Outcome run_cograph(const Instance &inst) {
	if (inst.objective != Objective::HappyVertices)
		throw NoApplicableAlgorithm({"cograph: only the vertex objective is supported"});
	Cotree ct;
	try {
		ct = build_cotree(inst.graph);
	} catch (const NotCograph &e) {
		throw NoApplicableAlgorithm({std::string("cograph: ") + e.what()});
	}
	CographStats st;
	Outcome o{solve_mhv_cograph(inst, ct, &st), "cograph", {}};
	o.counters = {{"cotree_nodes", static_cast<std::int64_t>(ct.nodes.size())},
	              {"components", st.components}};
	return o;
}

Outcome run_paramk(const Instance &inst, std::int64_t k) {
	KDecision dec = decide_by_k(inst, k);
	Outcome o{std::move(dec.solution), "paramk", {}};
	o.counters = {{"immediate_yes", dec.outcome.immediate() ? 1 : 0},
	              {"rules_applied", static_cast<std::int64_t>(dec.outcome.trace.size())},
	              {"cover_size", dec.vc_stats.cover_size},
	              {"guesses_evaluated", as_i64(dec.vc_stats.guesses_evaluated)}};
	o.counters.push_back({"decision", dec.yes ? 1 : 0});
	return o;
}

std::uint64_t table_bound(int ell, int width) {
	std::uint64_t bound = 1;
	for (int i = 0; i <= width; ++i) {
		if (bound > kTableCap)
			break;
		bound *= static_cast<std::uint64_t>(2 * ell);
	}
	return bound;
}

Outcome run_auto(const Instance &inst, const SolveOptions &opts) {
	std::vector<std::string> reasons;
	if (inst.objective == Objective::HappyVertices) {
		try {
			Outcome o = run_cograph(inst);
			o.name = "auto/cograph";
			return o;
		} catch (const NoApplicableAlgorithm &e) {
			reasons.push_back(e.reasons().front());
		}
	} else {
		reasons.push_back("cograph: only the vertex objective is supported");
	}

	// Candidates ranked by parameter; ties keep the listed order.
	struct Candidate {
		int param;
		Algorithm alg;
	};
	std::vector<Candidate> cands;

	int width = opts.td ? opts.td->width() : build_decomposition(inst.graph).width();
	if (table_bound(inst.ell(), width) <= kTableCap && width + 1 <= opts.max_bag_for_tw)
		cands.push_back({width, Algorithm::Tw});
	else
		reasons.push_back("tw: width " + std::to_string(width) + " gives tables beyond the cap");

	const int vc_cap = std::min(kAutoVcCap, opts.vc_bound);
	try {
		cands.push_back({find_vertex_cover(inst.graph, vc_cap).size(), Algorithm::Vc});
	} catch (const BoundExceeded &) {
		reasons.push_back("vc: no vertex cover of size <= " + std::to_string(vc_cap));
	}
	const int clique_cap = std::min(kAutoCliqueCap, opts.clique_bound);
	try {
		cands.push_back({find_clique_modulator(inst.graph, clique_cap).size(), Algorithm::Clique});
	} catch (const BoundExceeded &) {
		reasons.push_back("clique: no clique modulator of size <= " + std::to_string(clique_cap));
	}
	std::stable_sort(cands.begin(), cands.end(),
	                 [](const Candidate &a, const Candidate &b) { return a.param < b.param; });

	if (!cands.empty()) {
		Outcome o;
		switch (cands.front().alg) {
		case Algorithm::Tw:
			o = run_tw(inst, opts);
			break;
		case Algorithm::Vc:
			o = run_vc(inst, opts);
			break;
		default:
			o = run_clique(inst, opts);
			break;
		}
		o.name = "auto/" + o.name;
		return o;
	}

	const std::uint64_t need = extension_count(inst);
	if (need <= opts.oracle_budget) {
		Outcome o = run_oracle(inst, opts);
		o.name = "auto/oracle";
		return o;
	}
	reasons.push_back("oracle: " + std::to_string(need) + " colorings exceed the budget");
	throw NoApplicableAlgorithm(std::move(reasons));
}

} // namespace

std::string to_string(Algorithm a) {
	switch (a) {
	case Algorithm::Oracle:
		return "oracle";
	case Algorithm::Tw:
		return "tw";
	case Algorithm::Vc:
		return "vc";
	case Algorithm::Clique:
		return "clique";
	case Algorithm::Cograph:
		return "cograph";
	case Algorithm::ParamK:
		return "paramk";
	case Algorithm::Auto:
		return "auto";
	}
	return "?";
}

Algorithm algorithm_from_string(const std::string &s) {
	for (Algorithm a : {Algorithm::Oracle, Algorithm::Tw, Algorithm::Vc, Algorithm::Clique,
	                    Algorithm::Cograph, Algorithm::ParamK, Algorithm::Auto})
		if (to_string(a) == s)
			return a;
	throw InputError("unknown algorithm '" + s + "'");
}

RunReport solve(const Instance &inst, Algorithm alg, const SolveOptions &opts) {
	inst.validate();
	std::optional<std::int64_t> k = opts.k ? opts.k : inst.threshold;
	if (k && *k < 0)
		throw InputError("threshold must be nonnegative");

	const auto start = std::chrono::steady_clock::now();
	Outcome o;
	switch (alg) {
	case Algorithm::Oracle:
		o = run_oracle(inst, opts);
		break;
	case Algorithm::Tw:
		o = run_tw(inst, opts);
		break;
	case Algorithm::Vc:
		o = run_vc(inst, opts);
		break;
	case Algorithm::Clique:
		o = run_clique(inst, opts);
		break;
	case Algorithm::Cograph:
		o = run_cograph(inst);
		break;
	case Algorithm::ParamK:
		if (!k)
			throw InputError("paramk needs a threshold (--k or a 'k' record)");
		o = run_paramk(inst, *k);
		break;
	case Algorithm::Auto:
		o = run_auto(inst, opts);
		break;
	}
	const auto stop = std::chrono::steady_clock::now();

	RunReport r;
	r.algorithm = o.name;
	r.n = inst.n();
	r.m = inst.m();
	r.ell = inst.ell();
	r.objective = inst.objective;
	r.coloring = o.solution.coloring;
	r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
	r.counters = std::move(o.counters);

	// Never report a value the witness does not reach.
	const Solution check = evaluate(inst, r.coloring);
	if (check.value(inst.objective) != o.solution.value(inst.objective))
		throw std::logic_error(o.name + ": witness evaluates to " +
		                       std::to_string(check.value(inst.objective)) + ", solver claimed " +
		                       std::to_string(o.solution.value(inst.objective)));
	r.value = check.value(inst.objective);
	if (k) {
		r.k = k;
		r.decision = r.value >= *k;
		if (alg == Algorithm::ParamK) {
			// paramk returns a witness, not an optimum; its own decision is authoritative
			for (auto &[name, v] : r.counters)
				if (name == "decision")
					r.decision = v == 1;
		}
	}
	return r;
}

std::string report_json(const RunReport &r, bool with_timing) {
	nlohmann::ordered_json j;
	j["algorithm"] = r.algorithm;
	j["n"] = r.n;
	j["m"] = r.m;
	j["ell"] = r.ell;
	j["objective"] = to_string(r.objective);
	j["value"] = r.value;
	j["coloring"] = r.coloring;
	j["millis"] = with_timing ? r.millis : 0;
	nlohmann::ordered_json counters = nlohmann::ordered_json::object();
	for (const auto &[name, v] : r.counters)
		counters[name] = v;
	j["counters"] = counters;
	if (r.k) {
		j["k"] = *r.k;
		j["decision"] = r.decision.value_or(false) ? "yes" : "no";
	}
	return j.dump(2) + "\n";
}

} // namespace happy
