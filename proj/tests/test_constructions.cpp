#include <doctest.h>

#include "support.hpp"
#include "tk/constructions.hpp"

using namespace tk;

TEST_CASE("named graphs") {
    auto [g, x] = example_graph();
    CHECK(g.order() == 6);
    CHECK(g.size() == 7);
    CHECK(g.label(x) == "1");
    CHECK(petersen_graph().size() == 15);
    CHECK(regular_degree(petersen_graph()) == 3);
    CHECK(regular_degree(rook_3x3()) == 4);
    CHECK(hypercube(3).size() == 12);
    CHECK(star_graph(4).order() == 5);
    CHECK_THROWS_AS(cycle_graph(2), GraphError);
    CHECK(builtin_graph("c6")->size() == 6);
    CHECK(builtin_graph("k4")->size() == 6);
    CHECK(builtin_graph("s3")->size() == 0);
    CHECK(builtin_graph("star3")->order() == 4);
    CHECK(builtin_graph("example")->order() == 6);
    CHECK_FALSE(builtin_graph("nope"));
    CHECK_FALSE(builtin_graph("kx"));
}

TEST_CASE("cartesian product") {
    Graph p = cartesian_product(path_graph(2), path_graph(3));
    CHECK(p.order() == 6);
    CHECK(p.size() == 7);
    CHECK(p.label(4) == "(1,1)");
}

TEST_CASE("apex extension") {
    auto [g, x] = example_graph();
    auto e2 = apex_extension(g, x, empty_graph(2));
    CHECK(e2.graph.order() == 13);
    CHECK(e2.graph.label(e2.apex) == "w");
    CHECK(e2.graph.degree(e2.apex) == 2);
    auto c3 = apex_extension(g, x, complete_graph(3));
    CHECK(c3.graph.order() == 19);
    CHECK(c3.graph.size() == 7 * 3 + 6 * 3 + 3);

    // distances from w are one more than distances from x in the first factor
    auto dg = testing::distances(g, x);
    auto dh = testing::distances(c3.graph, c3.apex);
    for (Vertex v = 0; v < c3.apex; ++v) CHECK(dh[v] == dg[c3.origin[v]->first] + 1);
    CHECK_FALSE(c3.origin[c3.apex]);
}

TEST_CASE("apex preconditions") {
    auto [g, x] = example_graph();
    CHECK_THROWS_WITH_AS(apex_extension(g, x, path_graph(3)), doctest::Contains("regular"), GraphError);
    CHECK_THROWS_AS(apex_extension(g, x, empty_graph(1)), GraphError);
    CHECK_THROWS_AS(apex_extension(g, 17, empty_graph(2)), GraphError);
    std::vector<Edge> split{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(apex_extension(Graph(4, split), 0, empty_graph(2)), GraphError);
    CHECK_NOTHROW(apex_extension(g, x, cycle_graph(4)));
}

TEST_CASE("distance-regular around a vertex") {
    CHECK(is_distance_regular_around(petersen_graph(), 0));
    CHECK(is_distance_regular_around(cycle_graph(7), 3));
    auto [g, x] = example_graph();
    CHECK_FALSE(is_distance_regular_around(g, x));
}
