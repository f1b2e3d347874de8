#include "doctest.h"

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "happy/errors.hpp"
#include "happy/oracle.hpp"

using namespace happy;
using fixtures::make;

TEST_CASE("oracle on the path a-b-c") {
	Instance inst = fixtures::p3();
	Solution s = solve_exact(inst);
	CHECK(s.happy_vertices == 1);
	// lexicographically smallest optimum
	CHECK(s.coloring == FullColoring{1, 1, 2});

	inst.threshold = 1;
	CHECK(decide_exact(inst));
	inst.threshold = 2;
	CHECK_FALSE(decide_exact(inst));
	inst.threshold = 0;
	CHECK(decide_exact(inst));
	inst.threshold.reset();
	CHECK_THROWS_AS(decide_exact(inst), InputError);
}

TEST_CASE("oracle on a star with precolored leaves") {
	Instance star = make(4, {{0, 1}, {0, 2}, {0, 3}}, {0, 1, 1, 1}, 2);
	CHECK(solve_exact(star).happy_vertices == 4);
}

TEST_CASE("uncolored connected graph is fully happy") {
	Instance inst = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, {}, 3);
	CHECK(solve_exact(inst).happy_vertices == 4);
	inst.objective = Objective::HappyEdges;
	CHECK(solve_exact(inst).happy_edges == 5);
}

TEST_CASE("budget and counting") {
	Instance inst = make(10, {}, {}, 4);
	CHECK(extension_count(inst) == 1u << 20);
	CHECK_THROWS_AS(solve_exact(inst, 1000), BudgetExceeded);
	OracleStats st;
	Instance small = fixtures::p3();
	solve_exact(small, kDefaultOracleBudget, &st);
	CHECK(st.colorings_enumerated == 2);
}

TEST_CASE("oracle agrees with full enumeration") {
	std::mt19937_64 rng(11);
	for (int i = 0; i < 150; ++i) {
		const int n = 1 + static_cast<int>(rng() % 7);
		const int ell = 1 + static_cast<int>(rng() % 3);
		const auto obj = i % 2 ? Objective::HappyEdges : Objective::HappyVertices;
		Instance inst = brute::random_instance(rng, n, ell, 45, 40, obj);
		Solution s = solve_exact(inst);
		CHECK(s.value(obj) == brute::best_value(inst));
		CHECK(evaluate(inst, s.coloring).value(obj) == s.value(obj));
	}
}
