#include "happy/errors.hpp"

namespace happy {

namespace {

std::string describe_witness(const std::vector<int> &w) {
	std::string s = "graph is not a cograph, induced P4:";
	for (int v : w)
		s += " " + std::to_string(v + 1);
	return s;
}

std::string join_reasons(const std::vector<std::string> &reasons) {
	std::string s = "no applicable algorithm";
	for (const auto &r : reasons)
		s += "; " + r;
	return s;
}

} // namespace

NotCograph::NotCograph(std::vector<int> witness)
	: Error(describe_witness(witness)), witness_(std::move(witness)) {}

NoApplicableAlgorithm::NoApplicableAlgorithm(std::vector<std::string> reasons)
	: Error(join_reasons(reasons)), reasons_(std::move(reasons)) {}

} // namespace happy
