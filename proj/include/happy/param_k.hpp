#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "happy/graph.hpp"
#include "happy/vc_solver.hpp"

namespace happy {

struct ImmediateYes {
	FullColoring witness; // reaches the threshold on the original instance
};

/// Equivalent smaller problem: original value >= k iff the reduced value,
/// ignoring `ignored` vertices, is >= k - happy_offset.
struct Reduced {
	Instance instance;
	VertexCoverCertificate cover;
	IgnoredSet ignored;
	std::int64_t happy_offset = 0;
};

struct PreprocessOutcome {
	std::variant<ImmediateYes, Reduced> result;
	std::vector<std::string> trace; // rules applied, in order

	bool immediate() const { return std::holds_alternative<ImmediateYes>(result); }
};

/// Happy edges parameterized by k.
PreprocessOutcome preprocess_mhe_k(const Instance &inst, std::int64_t k);

/// Happy vertices parameterized by k and ell.
PreprocessOutcome preprocess_mhv_kl(const Instance &inst, std::int64_t k);

struct KDecision {
	bool yes = false;
	Solution solution;   // witness on the original instance
	PreprocessOutcome outcome;
	VcStats vc_stats;
};

/// Runs the matching preprocessing and, when it does not settle the
/// question, the vertex-cover solver on the reduced instance.
KDecision decide_by_k(const Instance &inst, std::int64_t k);

} // namespace happy
