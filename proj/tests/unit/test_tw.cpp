#include "doctest.h"

#include "../support/brute.hpp"
#include "../support/fixtures.hpp"
#include "happy/errors.hpp"
#include "happy/generate.hpp"
#include "happy/tw_solver.hpp"

using namespace happy;
using fixtures::make;

TEST_CASE("min-fill widths") {
	GenParams gp;
	gp.n = 30;
	CHECK(build_decomposition(generate("tree", 4, gp).graph).width() == 1);
	for (int q = 1; q <= 6; ++q)
		CHECK(build_decomposition(fixtures::complete(q)).width() == q - 1);
	Graph c4 = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
	TreeDecomposition td = build_decomposition(c4);
	CHECK(td.width() == 2);
	CHECK_NOTHROW(validate_decomposition(td, c4));
}

TEST_CASE("decomposition validation names the broken axiom") {
	Graph p3 = fixtures::path(3);
	TreeDecomposition missing{{{0, 1}}, {}};
	CHECK_THROWS_WITH_AS(validate_decomposition(missing, p3), doctest::Contains("vertex coverage"),
	                     InvalidDecomposition);
	TreeDecomposition no_edge{{{0, 1}, {2}}, {{0, 1}}};
	CHECK_THROWS_WITH_AS(validate_decomposition(no_edge, p3), doctest::Contains("edge coverage"),
	                     InvalidDecomposition);
	TreeDecomposition split{{{0, 1}, {1, 2}, {0}}, {{0, 1}, {1, 2}}};
	CHECK_THROWS_WITH_AS(validate_decomposition(split, p3), doctest::Contains("connectedness"),
	                     InvalidDecomposition);
	TreeDecomposition cycle{{{0, 1}, {1, 2}, {1}}, {{0, 1}, {1, 2}, {2, 0}}};
	CHECK_THROWS_WITH_AS(validate_decomposition(cycle, p3), doctest::Contains("tree shape"),
	                     InvalidDecomposition);
}

TEST_CASE("PACE td round trip") {
	Graph c4 = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
	TreeDecomposition td = build_decomposition(c4);
	std::string text = write_td(td, 4);
	CHECK(text.rfind("s td ", 0) == 0);
	TreeDecomposition back = parse_td(text, 4);
	CHECK(back.bags == td.bags);
	CHECK_NOTHROW(validate_decomposition(back, c4));
	CHECK_THROWS_AS(parse_td("s td 1 2 3\nb 1 1 2 3\n", 3), ParseError);
	CHECK_THROWS_AS(parse_td("s td 1 2 5\nb 1 1 2\n", 3), ParseError);
}

TEST_CASE("nice decomposition of a single edge") {
	Graph edge = fixtures::path(2);
	TreeDecomposition td{{{0, 1}}, {}};
	NiceTreeDecomposition ntd = make_nice(td, edge);
	CHECK_NOTHROW(validate_nice(ntd, edge));
	std::vector<NodeKind> kinds;
	for (int id : ntd.post_order())
		kinds.push_back(ntd.nodes[id].kind);
	CHECK(kinds == std::vector<NodeKind>{NodeKind::Leaf, NodeKind::IntroduceVertex,
	                                     NodeKind::IntroduceVertex, NodeKind::IntroduceEdge,
	                                     NodeKind::Forget, NodeKind::Forget});
	CHECK(ntd.nodes[ntd.root].bag.empty());

	Graph none(0);
	NiceTreeDecomposition empty = make_nice(build_decomposition(none), none);
	CHECK(empty.nodes.size() == 1);
	CHECK(empty.nodes[empty.root].kind == NodeKind::Leaf);
}

TEST_CASE("nice decompositions of random graphs validate") {
	std::mt19937_64 rng(8);
	for (int t = 0; t < 40; ++t) {
		Instance inst = brute::random_instance(rng, 1 + static_cast<int>(rng() % 10), 2, 35, 0,
		                                       Objective::HappyVertices);
		TreeDecomposition td = build_decomposition(inst.graph);
		CHECK_NOTHROW(validate_decomposition(td, inst.graph));
		NiceTreeDecomposition ntd = make_nice(td, inst.graph);
		CHECK_NOTHROW(validate_nice(ntd, inst.graph));
		CHECK(ntd.width() == td.width());
	}
}

TEST_CASE("treewidth DP on small instances") {
	Instance p4 = make(4, {{0, 1}, {1, 2}, {2, 3}}, {1, 0, 0, 2}, 2);
	CHECK(solve_tw(p4).happy_vertices == 2);
	p4.objective = Objective::HappyEdges;
	CHECK(solve_tw(p4).happy_edges == 2);

	Instance star = make(4, {{0, 1}, {0, 2}, {0, 3}}, {0, 1, 2, 3}, 3, Objective::HappyEdges);
	CHECK(solve_tw(star).happy_edges == 1);

	GenParams gp;
	gp.n = 20;
	gp.precolor_pct = 0;
	Instance tree = generate("tree", 9, gp);
	tree.precoloring = PartialColoring(std::vector<Color>(20, 2), 3);
	CHECK(solve_tw(tree).happy_vertices == 20);
	tree.precoloring = PartialColoring(20, 3);
	tree.objective = Objective::HappyEdges;
	CHECK(solve_tw(tree).happy_edges == 19);
}

TEST_CASE("treewidth DP matches enumeration") {
	std::mt19937_64 rng(21);
	for (int t = 0; t < 200; ++t) {
		const int n = 1 + static_cast<int>(rng() % 9);
		const int ell = 1 + static_cast<int>(rng() % 3);
		const auto obj = t % 2 ? Objective::HappyEdges : Objective::HappyVertices;
		Instance inst = brute::random_instance(rng, n, ell, 40, 40, obj);
		TwStats st;
		Solution s = solve_tw(inst, &st);
		CHECK(s.value(obj) == brute::best_value(inst));
		CHECK(evaluate(inst, s.coloring).value(obj) == s.value(obj));
		std::uint64_t bound = 1;
		for (int i = 0; i <= st.width; ++i)
			bound *= static_cast<std::uint64_t>(obj == Objective::HappyVertices ? 2 * ell : ell);
		CHECK(st.max_table_entries <= bound);
	}
}

TEST_CASE("user decomposition must fit the graph") {
	Instance inst = fixtures::p3();
	TreeDecomposition bad{{{0, 1}}, {}};
	CHECK_THROWS_AS(make_nice(bad, inst.graph), InvalidDecomposition);
}
