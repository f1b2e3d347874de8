#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "happy/graph.hpp"

namespace happy {

struct VertexCoverCertificate {
	std::vector<Vertex> cover; // sorted
	int size() const { return static_cast<int>(cover.size()); }
};

bool is_vertex_cover(const Graph &g, const std::vector<Vertex> &cover);

/// With a bound: a minimum cover found by a bounded search tree, or
/// BoundExceeded if the minimum is larger. Without: endpoints of a greedy
/// maximal matching (a 2-approximation).
VertexCoverCertificate find_vertex_cover(const Graph &g, std::optional<int> bound);

/// A guessed behavior of an optimal coloring on the cover: which cover
/// vertices share a color (parts) and which are happy (promised).
struct BehaviorGuess {
	std::vector<std::vector<Vertex>> parts;
	std::vector<Vertex> promised;
};

enum class StarCondition { None = 0, PaletteTooLarge = 1, PaletteMismatch = 2, SharedNeighbor = 3,
                           CrossPartNeighbor = 4 };

struct StarCheck {
	bool ok = true;
	StarCondition violated = StarCondition::None;
};

/// The four feasibility conditions on a behavior guess, checked in order.
StarCheck check_star_conditions(const Instance &inst, const BehaviorGuess &guess);

/// Vertices excluded from the happy-vertex objective; empty means none.
using IgnoredSet = std::vector<bool>;

struct VcStats {
	int cover_size = 0;
	std::uint64_t guesses_evaluated = 0;
	std::uint64_t guesses_feasible = 0;
};

/// Maximizes happy vertices outside `ignored` by enumerating behavior guesses
/// on the cover and completing each with forced colors, a max-weight matching
/// for undetermined parts, and a rule-based pass over the independent set.
Solution solve_mhv_vc(const Instance &inst, const VertexCoverCertificate &cover,
                      const IgnoredSet &ignored = {}, VcStats *stats = nullptr);

Solution solve_mhe_vc(const Instance &inst, const VertexCoverCertificate &cover,
                      VcStats *stats = nullptr);

/// Finds a minimum cover within `bound` and dispatches on the objective.
Solution solve_vc(const Instance &inst, int bound, VcStats *stats = nullptr);

} // namespace happy
