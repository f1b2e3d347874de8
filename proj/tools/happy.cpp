// happy: command-line front end for the solver library.
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "happy/errors.hpp"
#include "happy/generate.hpp"
#include "happy/instance_io.hpp"
#include "happy/reductions.hpp"
#include "happy/solve.hpp"

namespace fs = std::filesystem;
using namespace happy;

namespace {

enum Exit { kYes = 0, kNo = 1, kInput = 2, kBudget = 3 };

void emit(const std::string &path, const std::string &text) {
	if (path == "-")
		std::cout << text;
	else
		write_file(path, text);
}

Instance load(const std::string &path) {
	try {
		return parse_instance(read_file(path));
	} catch (const ParseError &e) {
		throw InputError(path + ": " + e.what());
	}
}

struct SolveArgs {
	std::string alg = "auto";
	std::string input;
	std::optional<std::int64_t> k;
	std::string objective;
	std::string td;
	bool json = false;
	bool no_timing = false;
	std::uint64_t budget = kDefaultOracleBudget;
};

int cmd_solve(const SolveArgs &a) {
	Instance inst = load(a.input);
	if (!a.objective.empty())
		inst.objective = objective_from_string(a.objective);
	SolveOptions opts;
	opts.k = a.k;
	opts.oracle_budget = a.budget;
	if (!a.td.empty())
		opts.td = parse_td(read_file(a.td), inst.n());
	if (opts.k)
		inst.threshold.reset(); // the override may exceed bounds the file's k obeyed
	if (opts.k && *opts.k > (inst.objective == Objective::HappyVertices ? inst.n() : inst.m()))
		throw InputError("threshold exceeds the largest possible objective value");

	RunReport r = solve(inst, algorithm_from_string(a.alg), opts);
	if (a.json) {
		std::cout << report_json(r, !a.no_timing);
	} else {
		std::cout << "algorithm " << r.algorithm << "\n"
		          << "objective " << to_string(r.objective) << "\n"
		          << "value " << r.value << "\n";
		if (r.decision)
			std::cout << "decision " << (*r.decision ? "yes" : "no") << "\n";
		if (!a.no_timing)
			std::cout << "millis " << r.millis << "\n";
		for (const auto &[name, v] : r.counters)
			std::cout << "counter " << name << " " << v << "\n";
		std::cout << write_coloring(r.coloring);
	}
	return r.decision && !*r.decision ? kNo : kYes;
}

struct GenArgs {
	std::string model;
	std::uint64_t seed = 0;
	GenParams params;
	std::string objective = "vertices";
	std::optional<std::int64_t> k;
	std::string out = "-";
};

int cmd_gen(GenArgs a) {
	a.params.objective = objective_from_string(a.objective);
	a.params.k = a.k;
	Instance inst = generate(a.model, a.seed, a.params);
	emit(a.out, write_instance(inst));
	return kYes;
}

struct ReduceArgs {
	std::string target;
	std::string input;
	std::int64_t k = 0;
	std::string out = "-";
};

int cmd_reduce(const ReduceArgs &a) {
	Instance inst = load(a.input);
	ReductionArtifact art = a.target == "bipartite" ? to_bipartite_mhe(inst, a.k)
	                                                : to_split_mhe(inst, a.k);
	std::ostringstream text;
	text << "# " << a.target << " image of " << fs::path(a.input).filename().string() << ": m "
	     << art.m << ", k " << art.k << ", k' " << art.k_prime;
	if (a.target == "split")
		text << ", T " << art.copies;
	text << "\n" << write_instance(art.produced);
	emit(a.out, text.str());
	return kYes;
}

int cmd_verify(const std::string &input, const std::string &coloring) {
	Instance inst = load(input);
	FullColoring c = parse_coloring(read_file(coloring), inst.n());
	for (Color col : c)
		if (col > inst.ell())
			throw InputError("coloring uses color " + std::to_string(col) + " beyond ell " +
			                 std::to_string(inst.ell()));
	Solution s = evaluate(inst, c);
	std::cout << "happy_vertices " << s.happy_vertices << "\n"
	          << "happy_edges " << s.happy_edges << "\n"
	          << "value " << s.value(inst.objective) << "\n";
	if (inst.threshold) {
		const bool yes = s.value(inst.objective) >= *inst.threshold;
		std::cout << "decision " << (yes ? "yes" : "no") << "\n";
		return yes ? kYes : kNo;
	}
	return kYes;
}

struct BenchArgs {
	std::string suite;
	std::string out = "-";
	std::vector<std::string> algs{"oracle", "tw", "vc", "clique", "cograph", "auto"};
	bool no_timing = false;
};

std::string csv_field(std::string s) {
	if (s.find_first_of(",\"\n") == std::string::npos)
		return s;
	std::string q = "\"";
	for (char ch : s)
		q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
	return q + "\"";
}

int cmd_bench(const BenchArgs &a) {
	std::vector<fs::path> files;
	for (const auto &entry : fs::directory_iterator(a.suite))
		if (entry.is_regular_file() && entry.path().extension() == ".happy")
			files.push_back(entry.path());
	std::sort(files.begin(), files.end());
	if (files.empty())
		throw InputError("no .happy instances in '" + a.suite + "'");

	std::ostringstream csv;
	csv << "instance,algorithm,objective,n,m,ell,status,value,millis\n";
	bool consistent = true;
	for (const auto &file : files) {
		Instance inst = load(file.string());
		std::optional<std::int64_t> agreed;
		for (const auto &alg : a.algs) {
			std::string status = "ok", value, millis;
			try {
				RunReport r = solve(inst, algorithm_from_string(alg));
				value = std::to_string(r.value);
				millis = std::to_string(a.no_timing ? 0 : r.millis);
				if (agreed && *agreed != r.value) {
					consistent = false;
					std::cerr << file.filename().string() << ": " << alg << " found " << r.value
					          << ", earlier algorithms found " << *agreed << "\n";
				}
				agreed = r.value;
			} catch (const NoApplicableAlgorithm &e) {
				status = "not-applicable";
			} catch (const BudgetExceeded &) {
				status = "budget-exceeded";
			} catch (const BoundExceeded &) {
				status = "bound-exceeded";
			}
			csv << csv_field(file.filename().string()) << ',' << alg << ','
			    << to_string(inst.objective) << ',' << inst.n() << ',' << inst.m() << ','
			    << inst.ell() << ',' << status << ',' << value << ',' << millis << '\n';
		}
	}
	emit(a.out, csv.str());
	return consistent ? kYes : kNo;
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"Maximum happy vertices / edges solver"};
	app.require_subcommand(1);

	SolveArgs sa;
	auto *solve_cmd = app.add_subcommand("solve", "solve an instance");
	solve_cmd->add_option("--alg", sa.alg, "oracle|tw|vc|clique|cograph|paramk|auto")
	    ->check(CLI::IsMember({"oracle", "tw", "vc", "clique", "cograph", "paramk", "auto"}));
	solve_cmd->add_option("--input", sa.input, "instance file")->required();
	solve_cmd->add_option("--k", sa.k, "decision threshold")->check(CLI::NonNegativeNumber);
	solve_cmd->add_option("--objective", sa.objective, "override the file objective")
	    ->check(CLI::IsMember({"vertices", "edges"}));
	solve_cmd->add_option("--td", sa.td, "tree decomposition in PACE .td format");
	solve_cmd->add_flag("--json", sa.json, "print a JSON report");
	solve_cmd->add_flag("--no-timing", sa.no_timing, "omit wall time (reproducible output)");
	solve_cmd->add_option("--budget", sa.budget, "oracle coloring budget");

	GenArgs ga;
	auto *gen_cmd = app.add_subcommand("gen", "generate a random instance");
	gen_cmd->add_option("--model", ga.model, "generator model")
	    ->required()
	    ->check(CLI::IsMember(generator_models()));
	gen_cmd->add_option("--seed", ga.seed, "random seed")->required();
	gen_cmd->add_option("--n", ga.params.n, "vertex count");
	gen_cmd->add_option("--ell", ga.params.ell, "number of colors");
	gen_cmd->add_option("--precolor-pct", ga.params.precolor_pct, "percent of vertices precolored");
	gen_cmd->add_option("--edge-pct", ga.params.edge_pct, "edge probability in percent");
	gen_cmd->add_option("--d", ga.params.d, "planted cover or modulator size");
	gen_cmd->add_option("--left", ga.params.left, "bipartite left side size");
	gen_cmd->add_option("--clique", ga.params.clique, "split clique size");
	gen_cmd->add_option("--objective", ga.objective, "vertices|edges")
	    ->check(CLI::IsMember({"vertices", "edges"}));
	gen_cmd->add_option("--k", ga.k, "threshold record");
	gen_cmd->add_option("--out", ga.out, "output file, - for stdout");

	ReduceArgs ra;
	auto *reduce_cmd = app.add_subcommand("reduce", "apply a hardness reduction to an edge instance");
	reduce_cmd->add_option("--target", ra.target, "bipartite|split")
	    ->required()
	    ->check(CLI::IsMember({"bipartite", "split"}));
	reduce_cmd->add_option("--input", ra.input, "instance file")->required();
	reduce_cmd->add_option("--k", ra.k, "source threshold")->required();
	reduce_cmd->add_option("--out", ra.out, "output file, - for stdout");

	std::string verify_input, verify_coloring;
	auto *verify_cmd = app.add_subcommand("verify", "score a coloring");
	verify_cmd->add_option("--input", verify_input, "instance file")->required();
	verify_cmd->add_option("--coloring", verify_coloring, "coloring file")->required();

	BenchArgs ba;
	auto *bench_cmd = app.add_subcommand("bench", "run every algorithm on a suite");
	bench_cmd->add_option("--suite", ba.suite, "directory of .happy files")->required();
	bench_cmd->add_option("--out", ba.out, "CSV output, - for stdout");
	bench_cmd->add_option("--algs", ba.algs, "algorithms to run")->delimiter(',');
	bench_cmd->add_flag("--no-timing", ba.no_timing, "write 0 for wall time");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e);
		return code == 0 ? kYes : kInput;
	}

	try {
		if (*solve_cmd)
			return cmd_solve(sa);
		if (*gen_cmd)
			return cmd_gen(ga);
		if (*reduce_cmd)
			return cmd_reduce(ra);
		if (*verify_cmd)
			return cmd_verify(verify_input, verify_coloring);
		if (*bench_cmd)
			return cmd_bench(ba);
	} catch (const BudgetExceeded &e) {
		std::cerr << "budget exceeded: " << e.what() << "\n";
		return kBudget;
	} catch (const BoundExceeded &e) {
		std::cerr << "bound exceeded: " << e.what() << "\n";
		return kBudget;
	} catch (const NoApplicableAlgorithm &e) {
		std::cerr << "no applicable algorithm:\n";
		for (const auto &reason : e.reasons())
			std::cerr << "  " << reason << "\n";
		return kInput;
	} catch (const Error &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kInput;
	} catch (const fs::filesystem_error &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kInput;
	}
	return kInput;
}
