#pragma once

#include <algorithm>
#include <vector>

namespace happy {

/// Visits every set partition of {0..n-1} with at most max_parts blocks as a
/// restricted-growth string (block[i] <= 1 + max(block[0..i-1]), block[0] = 0),
/// in lexicographic order. The callback receives (blocks, block_count) and
/// returns false to stop early. n = 0 yields the single empty partition.
template <typename Visit>
void for_each_partition(int n, int max_parts, Visit &&visit) {
	if (n == 0) {
		std::vector<int> empty;
		visit(empty, 0);
		return;
	}
	if (max_parts <= 0)
		return;
	std::vector<int> block(static_cast<size_t>(n), 0);
	std::vector<int> prefix_max(static_cast<size_t>(n), 0); // max of block[0..i]
	while (true) {
		if (!visit(static_cast<const std::vector<int> &>(block), prefix_max[n - 1] + 1))
			return;
		int i = n - 1;
		while (i > 0) {
			int limit = std::min(prefix_max[i - 1] + 1, max_parts - 1);
			if (block[i] < limit)
				break;
			--i;
		}
		if (i == 0)
			return;
		++block[i];
		prefix_max[i] = std::max(prefix_max[i - 1], block[i]);
		for (int j = i + 1; j < n; ++j) {
			block[j] = 0;
			prefix_max[j] = prefix_max[i];
		}
	}
}

} // namespace happy
