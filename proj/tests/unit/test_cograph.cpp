#include "doctest.h"

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "happy/cograph.hpp"
#include "happy/errors.hpp"
#include "happy/generate.hpp"

using namespace happy;
using fixtures::make;

TEST_CASE("cotree recognition") {
	try {
		build_cotree(fixtures::path(4));
		FAIL("P4 is not a cograph");
	} catch (const NotCograph &e) {
		auto w = e.witness();
		std::sort(w.begin(), w.end());
		CHECK(w == std::vector<int>{0, 1, 2, 3});
	}

	Cotree p3 = build_cotree(fixtures::path(3));
	const CotreeNode &root = p3.nodes[p3.root];
	CHECK(root.kind == CotreeKind::Series);
	REQUIRE(root.children.size() == 2);
	// children ordered by smallest leaf: Parallel(a, c) first, then b
	CHECK(p3.nodes[root.children[0]].kind == CotreeKind::Parallel);
	CHECK(p3.leaves(root.children[0]) == std::vector<Vertex>{0, 2});
	CHECK(p3.nodes[root.children[1]].vertex == 1);

	Cotree k5 = build_cotree(fixtures::complete(5));
	CHECK(k5.nodes[k5.root].kind == CotreeKind::Series);
	CHECK(k5.nodes[k5.root].children.size() == 5);
	CHECK_NOTHROW(check_cotree(k5, fixtures::complete(5)));
	CHECK_THROWS_AS(check_cotree(k5, fixtures::path(5)), CotreeMismatch);
}

TEST_CASE("recognition agrees with the induced P4 test") {
	std::mt19937_64 rng(2);
	for (int t = 0; t < 150; ++t) {
		Instance inst = brute::random_instance(rng, 1 + static_cast<int>(rng() % 8), 2,
		                                       static_cast<int>(rng() % 100), 0,
		                                       Objective::HappyVertices);
		bool recognized = true;
		try {
			check_cotree(build_cotree(inst.graph), inst.graph);
		} catch (const NotCograph &e) {
			recognized = false;
			// the witness must induce a P4
			const auto &w = e.witness();
			REQUIRE(w.size() == 4);
			int edges = 0;
			for (int i = 0; i < 4; ++i)
				for (int j = i + 1; j < 4; ++j)
					edges += inst.graph.adjacent(w[i], w[j]);
			CHECK(edges == 3);
			CHECK(inst.graph.adjacent(w[0], w[1]));
			CHECK(inst.graph.adjacent(w[1], w[2]));
			CHECK(inst.graph.adjacent(w[2], w[3]));
		}
		CHECK(recognized == brute::p4_free(inst.graph));
	}
}

TEST_CASE("cograph solver examples") {
	Instance p3 = make(3, {{0, 1}, {1, 2}}, {1, 0, 1}, 2);
	CHECK(solve_mhv_cograph(p3, build_cotree(p3.graph)).happy_vertices == 3);

	Instance p3b = fixtures::p3();
	CHECK(solve_mhv_cograph(p3b, build_cotree(p3b.graph)).happy_vertices == 1);

	// join of an uncolored pair with a part using three colors
	Instance join = make(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}},
	                     {0, 0, 1, 2, 3, 0}, 3);
	Solution s = solve_mhv_cograph(join, build_cotree(join.graph));
	CHECK(s.happy_vertices == brute::best_value(join));
	CHECK(s.happy_vertices == 2);
	CHECK_FALSE(std::binary_search(s.happy_vertex_set.begin(), s.happy_vertex_set.end(), 0));
	CHECK_FALSE(std::binary_search(s.happy_vertex_set.begin(), s.happy_vertex_set.end(), 1));

	Instance blank = make(4, {{0, 1}, {1, 2}, {0, 2}}, {}, 3);
	CHECK(solve_mhv_cograph(blank, build_cotree(blank.graph)).happy_vertices == 4);

	Instance edges = fixtures::p3(Objective::HappyEdges);
	CHECK_THROWS_AS(solve_mhv_cograph(edges, build_cotree(edges.graph)), InputError);
}

TEST_CASE("cograph solver matches enumeration") {
	std::mt19937_64 rng(77);
	for (int t = 0; t < 150; ++t) {
		GenParams gp;
		gp.n = 1 + static_cast<int>(rng() % 9);
		gp.ell = 1 + static_cast<int>(rng() % 4);
		gp.precolor_pct = t % 2 ? 30 : 60;
		Instance inst = generate("cograph", rng(), gp);
		Solution s = solve_mhv_cograph(inst, build_cotree(inst.graph));
		CHECK(s.happy_vertices == brute::best_value(inst));
		CHECK(evaluate(inst, s.coloring).happy_vertices == s.happy_vertices);
	}
}
