#pragma once

#include <cstdint>
#include <vector>

namespace happy {

/// Rows are the parts to be colored, columns the candidate colors.
struct WeightMatrix {
	int rows = 0;
	int cols = 0;
	std::vector<std::int64_t> w; // row-major, nonnegative

	WeightMatrix() = default;
	WeightMatrix(int r, int c) : rows(r), cols(c), w(static_cast<size_t>(r) * c, 0) {}
	static WeightMatrix from_rows(const std::vector<std::vector<std::int64_t>> &m);

	std::int64_t &at(int i, int j) { return w[static_cast<size_t>(i) * cols + j]; }
	std::int64_t at(int i, int j) const { return w[static_cast<size_t>(i) * cols + j]; }
};

struct MatchingResult {
	std::vector<int> assignment; // row -> col, -1 if unmatched
	std::int64_t weight = 0;
};

/// Maximum-weight bipartite matching. With saturate_left every row is matched
/// (throws SaturationImpossible if rows > cols). Without it, rows may stay
/// unmatched. Among optimal matchings the lexicographically smallest
/// assignment vector is returned, with "unmatched" ordered after every column.
MatchingResult max_weight_matching(const WeightMatrix &m, bool saturate_left);

} // namespace happy
