#pragma once

#include <cstdint>
#include <vector>

#include "happy/graph.hpp"

namespace happy {

/// X such that G - X is a clique.
struct CliqueModulatorCertificate {
	std::vector<Vertex> modulator; // sorted
	std::vector<Vertex> clique;    // V \ X, sorted
	int size() const { return static_cast<int>(modulator.size()); }
};

bool is_clique_modulator(const Graph &g, const std::vector<Vertex> &modulator);

/// Wraps a modulator after checking that its complement is a clique.
CliqueModulatorCertificate make_clique_certificate(const Graph &g, std::vector<Vertex> modulator);

/// Minimum modulator (a minimum vertex cover of the complement graph), or
/// BoundExceeded when it is larger than `bound`.
CliqueModulatorCertificate find_clique_modulator(const Graph &g, int bound);

struct CliqueStats {
	std::uint64_t partition_guesses = 0; // (H, U) plus a partition of H, or a partition of X
	std::uint64_t clique_color_guesses = 0;
	std::uint64_t direct_colorings = 0;
};

/// Either no clique vertex is happy (guess the happy part of X and how it is
/// colored), or the clique is monochromatic in some color a (guess a, then
/// the same machinery on X).
Solution solve_mhv_clique(const Instance &inst, const CliqueModulatorCertificate &cert,
                          CliqueStats *stats = nullptr);

/// Folds the uncolored clique vertices into the modulator when there are at
/// most d+1 of them; otherwise colors them all alike (some optimum does) and
/// guesses that color. X is then colored by partition guessing plus matching.
Solution solve_mhe_clique(const Instance &inst, const CliqueModulatorCertificate &cert,
                          CliqueStats *stats = nullptr);

Solution solve_clique(const Instance &inst, int bound, CliqueStats *stats = nullptr);

} // namespace happy
