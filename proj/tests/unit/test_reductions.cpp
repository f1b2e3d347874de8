#include "doctest.h"

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "happy/errors.hpp"
#include "happy/oracle.hpp"
#include "happy/reductions.hpp"

using namespace happy;
using fixtures::make;

namespace {

Instance edge_instance(int n, std::initializer_list<std::pair<int, int>> edges,
                       std::vector<Color> colors, int ell) {
	return make(n, edges, std::move(colors), ell, Objective::HappyEdges);
}

} // namespace

TEST_CASE("threshold arithmetic") {
	Instance five = edge_instance(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}, {}, 2);
	CHECK(to_bipartite_mhe(five, 3).k_prime == 8);

	Instance three = edge_instance(4, {{0, 1}, {1, 2}, {2, 3}}, {}, 2);
	CHECK(to_split_mhe(three, 0).copies == 4);

	Instance two = edge_instance(3, {{0, 1}, {1, 2}}, {}, 2);
	auto art = to_split_mhe(two, 1);
	CHECK(art.copies == 2);
	CHECK(art.k_prime == 6);
}

TEST_CASE("bipartite image of one edge") {
	Instance e = edge_instance(2, {{0, 1}}, {1, 2}, 2);
	auto art = to_bipartite_mhe(e, 0);
	const Instance &h = art.produced;
	CHECK(h.n() == 3);
	CHECK(h.graph.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
	CHECK(h.precoloring.raw() == std::vector<Color>{1, 2, 0});
	CHECK(solve_exact(h).happy_edges == 1);
	CHECK(solve_exact(e).happy_edges == 0);
	CHECK(is_bipartite(h.graph));
}

TEST_CASE("edgeless sources") {
	Instance none = edge_instance(3, {}, {1, 0, 2}, 2);
	auto bip = to_bipartite_mhe(none, 0);
	CHECK(bip.produced.n() == 3);
	CHECK(bip.produced.m() == 0);
	CHECK(bip.k_prime == 0);
	auto split = to_split_mhe(none, 0);
	CHECK(split.copies == 1);
	CHECK(split.produced.n() == 3);
	CHECK(split.k_prime == 0);
}

TEST_CASE("reductions reject bad input") {
	CHECK_THROWS_AS(to_bipartite_mhe(fixtures::p3(), 0), InputError);
	Instance e = edge_instance(2, {{0, 1}}, {}, 2);
	CHECK_THROWS_AS(to_bipartite_mhe(e, 2), InputError);
	CHECK_THROWS_AS(to_split_mhe(e, -1), InputError);
	Instance big = edge_instance(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}, {}, 2);
	CHECK_THROWS_AS(to_split_mhe(big, 0, 50), SizeBudgetExceeded);
}

TEST_CASE("value identities on small sources") {
	std::mt19937_64 rng(6);
	for (int t = 0; t < 30; ++t) {
		Instance g = brute::random_instance(rng, 2 + static_cast<int>(rng() % 3), 2, 50, 60,
		                                    Objective::HappyEdges);
		const int base = brute::best_value(g);
		auto bip = to_bipartite_mhe(g, 0);
		CHECK(brute::best_value(bip.produced) == g.m() + base);
		// pulling back an optimal image coloring is optimal at the source
		Solution hs = solve_exact(bip.produced);
		CHECK(evaluate(g, bip.pull_back(hs.coloring)).happy_edges == base);

		if (g.m() <= 2) {
			for (int k = 0; k <= g.m(); ++k) {
				auto split = to_split_mhe(g, k);
				CHECK(is_split_partition(split.produced.graph, split.edge_map));
				CHECK((brute::best_value(split.produced) >= split.k_prime) == (base >= k));
			}
		}
	}
}
