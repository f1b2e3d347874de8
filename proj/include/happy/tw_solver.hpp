#pragma once

#include <cstdint>

#include "happy/graph.hpp"
#include "happy/tree_decomposition.hpp"

namespace happy {

struct TwStats {
	int width = -1;
	int nodes = 0;
	std::uint64_t max_table_entries = 0;
	std::uint64_t total_table_entries = 0;
};

/// Happy-vertex DP over a nice tree decomposition. A state is a bag coloring r
/// plus a promise set S of bag vertices that must end up happy; the value is
/// the number of happy vertices among already-forgotten vertices. A promised
/// vertex is credited when it is forgotten, so joins simply add.
Solution solve_mhv_tw(const Instance &inst, const NiceTreeDecomposition &ntd,
                      TwStats *stats = nullptr);

/// Happy-edge DP; an edge scores at its introduce-edge node.
Solution solve_mhe_tw(const Instance &inst, const NiceTreeDecomposition &ntd,
                      TwStats *stats = nullptr);

/// Builds a min-fill decomposition and dispatches on the instance objective.
Solution solve_tw(const Instance &inst, TwStats *stats = nullptr);

} // namespace happy
