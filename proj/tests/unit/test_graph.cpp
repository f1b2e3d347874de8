#include "doctest.h"

#include "../support/fixtures.hpp"
#include "happy/errors.hpp"

using namespace happy;
using fixtures::make;

TEST_CASE("graph construction rejects malformed edges") {
	std::vector<Edge> loop{{1, 1}};
	CHECK_THROWS_AS(Graph::from_edges(3, loop), InputError);
	std::vector<Edge> dup{{0, 1}, {0, 1}};
	CHECK_THROWS_AS(Graph::from_edges(3, dup), InputError);
	std::vector<Edge> out{{0, 3}};
	CHECK_THROWS_AS(Graph::from_edges(3, out), InputError);
	std::vector<Edge> reversed{{2, 0}};
	Graph g = Graph::from_edges(3, reversed);
	CHECK(g.adjacent(0, 2));
	CHECK(g.edges() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("complement of a path") {
	Graph c = fixtures::path(4).complement();
	CHECK(c.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}});
}

TEST_CASE("partial coloring validates colors") {
	CHECK_THROWS_AS(PartialColoring(std::vector<Color>{0, 3}, 2), InputError);
	CHECK_THROWS_AS(PartialColoring(std::vector<Color>{-1}, 2), InputError);
	CHECK_THROWS_AS(PartialColoring(2, 0), InputError);
	PartialColoring p(std::vector<Color>{2, 0, 2, 1}, 3);
	CHECK(p.precolored() == std::vector<Vertex>{0, 2, 3});
	CHECK(p.uncolored() == std::vector<Vertex>{1});
	CHECK(p.used_colors() == std::vector<Color>{1, 2});
}

TEST_CASE("happy vertices on small graphs") {
	Graph tri = fixtures::complete(3);
	CHECK(happy_vertices(tri, {1, 1, 1}).size() == 3);
	CHECK(happy_edges(tri, {1, 1, 1}).size() == 3);

	Graph p3 = fixtures::path(3);
	CHECK(happy_vertices(p3, {1, 1, 2}) == std::vector<Vertex>{0});
	CHECK(happy_edges(p3, {1, 1, 2}) == std::vector<Edge>{{0, 1}});

	Graph single(1);
	CHECK(happy_vertices(single, {4}).size() == 1);
	CHECK(happy_edges(Graph(5), {1, 2, 3, 1, 2}).empty());
	CHECK_THROWS_AS(happy_vertices(p3, {1, 0, 2}), InputError);
}

TEST_CASE("ignored vertices are not counted") {
	Graph p3 = fixtures::path(3);
	CHECK(count_happy_vertices(p3, {1, 1, 1}) == 3);
	CHECK(count_happy_vertices(p3, {1, 1, 1}, {true, false, false}) == 2);
}

TEST_CASE("neighborhood palette") {
	Instance star = make(4, {{0, 1}, {0, 2}, {0, 3}}, {0, 1, 1, 1}, 2);
	CHECK(neighborhood_palette(star.graph, star.precoloring, 0) == std::vector<Color>{1});

	Instance lone = make(2, {{0, 1}}, {0, 0}, 2);
	CHECK(neighborhood_palette(lone.graph, lone.precoloring, 0).empty());

	Instance mixed = make(2, {{0, 1}}, {2, 1}, 2);
	CHECK(neighborhood_palette(mixed.graph, mixed.precoloring, 0) == std::vector<Color>{1, 2});
}

TEST_CASE("evaluate scores and checks the extension") {
	Instance inst = fixtures::p3();
	Solution s = evaluate(inst, {1, 1, 2});
	CHECK(s.happy_vertices == 1);
	CHECK(s.happy_edges == 1);
	CHECK(s.happy_vertex_set == std::vector<Vertex>{0});

	try {
		evaluate(inst, {2, 1, 2});
		FAIL("expected an extension violation");
	} catch (const ExtensionViolation &e) {
		CHECK(e.vertex() == 0);
	}
	CHECK_THROWS_AS(evaluate(inst, {1, 3, 2}), InputError);
	CHECK_THROWS_AS(evaluate(inst, {1, 1}), InputError);

	Instance empty = make(0, {}, {}, 1);
	Solution e = evaluate(empty, {});
	CHECK(e.happy_vertices == 0);
	CHECK(e.happy_edges == 0);
}

TEST_CASE("instance validation bounds the threshold") {
	Instance inst = fixtures::p3();
	inst.threshold = 3;
	CHECK_NOTHROW(inst.validate());
	inst.threshold = 4;
	CHECK_THROWS_AS(inst.validate(), InputError);
	inst.objective = Objective::HappyEdges;
	inst.threshold = 3;
	CHECK_THROWS_AS(inst.validate(), InputError);
}
