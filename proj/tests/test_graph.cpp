#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tk/constructions.hpp"
#include "tk/graph.hpp"

using namespace tk;

TEST_CASE("graph basics") {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {1, 0}};
    Graph g(3, edges);
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.label(2) == "2");
    CHECK(is_tree(g));
    CHECK(is_bipartite(g));
    CHECK_FALSE(regular_degree(g));
    CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, 2});

    std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(2, loop), GraphError);
    std::vector<Edge> out_of_range{{0, 5}};
    CHECK_THROWS_AS(Graph(2, out_of_range), GraphError);
}

TEST_CASE("vertex tokens resolve labels first") {
    Graph g = parse_edge_list("b a\na c\n");
    CHECK(g.order() == 3);
    CHECK(g.vertex("a") == 1);
    CHECK(g.vertex("2") == 2);
    CHECK_THROWS_AS(g.vertex("zz"), GraphError);
    CHECK_THROWS_AS(g.vertex("7"), GraphError);
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("# triangle\n1 2\n2 3  # comment\n\n3 1\n");
    CHECK(g.size() == 3);
    CHECK(regular_degree(g) == 2);
    CHECK(to_edge_list(g) == "1 2\n1 3\n2 3\n");
    CHECK_THROWS_WITH_AS(parse_edge_list("1 2\n3\n"), doctest::Contains("line 2"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("4 4\n"), GraphError);
}

TEST_CASE("graph6 hand encodings") {
    // K3: n = 3 -> 'B'; upper-triangle bits 111 padded to 111000 = 56 -> 'w'.
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    // P3 0-1-2: bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000 = 40 -> 'g'.
    CHECK(to_graph6(path_graph(3)) == "Bg");
    CHECK(to_graph6(empty_graph(1)) == "@");
    Graph k3 = parse_graph6("Bw");
    CHECK(k3.size() == 3);
    CHECK(parse_graph6(">>graph6<<Bw") == k3);
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph6(""), GraphError);
    CHECK_THROWS_AS(parse_graph6("B"), GraphError);   // missing data byte
    CHECK_THROWS_AS(parse_graph6("Bww"), GraphError); // trailing byte
    CHECK_THROWS_AS(parse_graph6("Bx"), GraphError);  // nonzero padding bit
    CHECK_THROWS_AS(parse_graph6("B "), GraphError);  // byte below 63
}

TEST_CASE("graph6 round trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = testing::random_connected(rng, n, 0.3);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
    // 4-byte size form.
    Graph big = cycle_graph(70);
    auto s = to_graph6(big);
    CHECK(s[0] == '~');
    CHECK(parse_graph6(s) == big);
}

TEST_CASE("graph6 detection") {
    CHECK(looks_like_graph6("Bw\nDSw\n"));
    CHECK_FALSE(looks_like_graph6("1 2\n"));
    CHECK_FALSE(looks_like_graph6("\n"));
}

TEST_CASE("connectivity") {
    std::vector<Edge> edges{{0, 1}, {2, 3}};
    Graph g(4, edges);
    CHECK_FALSE(is_connected(g));
    CHECK(bfs_distances(g, 0)[3] == -1);
    CHECK(is_connected(petersen_graph()));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK(is_bipartite(hypercube(3)));
}
