#include "doctest.h"

#include "oracles.hpp"
#include "recolour/errors.hpp"
#include "recolour/gn_family.hpp"
#include "recolour/graph.hpp"

using namespace recolour;

TEST_CASE("graph construction keeps sorted symmetric adjacency")
{
    const std::vector<Edge> edges{{2, 0}, {0, 1}, {1, 0}};
    Graph g(3, edges);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK(!g.adjacent(1, 2));
    CHECK(std::vector<vertex>(g.neighbours(0).begin(), g.neighbours(0).end()) ==
          std::vector<vertex>{1, 2});
    CHECK(!g.add_edge(2, 0));
    CHECK(g.add_edge(1, 2));
    CHECK(g.edge_count() == 3);

    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), precondition_error);
    const std::vector<Edge> outside{{0, 3}};
    CHECK_THROWS_AS(Graph(3, outside), precondition_error);
}

TEST_CASE("complement")
{
    CHECK(complement(empty_graph(3)) == complete_graph(3));

    const Graph g1 = build_g1().graph;
    CHECK(complement(complement(g1)) == g1);

    // self-complementary: any adjacency-preserving bijection will do
    const auto iso = oracle::find_isomorphism(complement(cycle_graph(5)), cycle_graph(5));
    REQUIRE(iso);
    CHECK(is_isomorphism(complement(cycle_graph(5)), cycle_graph(5), *iso));
    CHECK(complement(cycle_graph(5)).edge_count() == 5);
}

TEST_CASE("induced subgraph")
{
    const std::vector<vertex> first_two{0, 1};
    const auto edge = induced_subgraph(complete_graph(3), first_two);
    CHECK(edge.graph == complete_graph(2));

    const Graph g1 = build_g1().graph;
    std::vector<vertex> all(8);
    for (int i = 0; i < 8; ++i)
        all[i] = i;
    const auto same = induced_subgraph(g1, all);
    CHECK(same.graph == g1);
    CHECK(same.old_id == all);
    CHECK(same.new_id == all);

    // drawing labels {2, 4, 7}
    const std::vector<vertex> stable{6, 1, 3};
    const auto sub = induced_subgraph(g1, stable);
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 0);
    CHECK(sub.old_id == std::vector<vertex>{1, 3, 6});
    CHECK(sub.new_id[6] == 2);
    CHECK(sub.new_id[0] == -1);

    const std::vector<vertex> bad{0, 9};
    CHECK_THROWS_AS(induced_subgraph(g1, bad), precondition_error);
}

TEST_CASE("substitute")
{
    const Graph g1 = build_g1().graph;
    for (vertex v = 0; v < 8; ++v) {
        const Graph s = substitute(g1, v, empty_graph(1));
        // moving v to the end is an isomorphism
        std::vector<vertex> to_s(8);
        for (vertex u = 0; u < 8; ++u)
            to_s[u] = u == v ? 7 : (u < v ? u : u - 1);
        CHECK(is_isomorphism(g1, s, to_s));
    }

    // P3 a-b-c with b replaced by K2 gives a diamond: K4 minus ac
    const Graph diamond = substitute(path_graph(3), 1, complete_graph(2));
    CHECK(diamond.vertex_count() == 4);
    CHECK(diamond.edge_count() == 5);
    CHECK(!diamond.adjacent(0, 1));
    CHECK(diamond.adjacent(2, 3));

    // h complete to exactly the old neighbourhood
    const Graph s = substitute(g1, 0, cycle_graph(4));
    CHECK(s.vertex_count() == 11);
    for (vertex x = 7; x < 11; ++x)
        for (vertex u = 0; u < 7; ++u)
            CHECK(s.adjacent(x, u) == g1.adjacent(0, u + 1));
    const std::vector<vertex> h_part{7, 8, 9, 10};
    CHECK(induced_subgraph(s, h_part).graph == cycle_graph(4));

    CHECK_THROWS_AS(substitute(g1, 8, complete_graph(2)), precondition_error);
    CHECK_THROWS_AS(substitute(g1, 0, empty_graph(0)), precondition_error);
}

TEST_CASE("isomorphism check rejects non-bijections and non-edges")
{
    const std::vector<vertex> repeated{0, 0, 1};
    CHECK(!is_isomorphism(path_graph(3), path_graph(3), repeated));
    const std::vector<vertex> swap_end{1, 0, 2};
    CHECK(!is_isomorphism(path_graph(3), path_graph(3), swap_end));
    const std::vector<vertex> reverse{2, 1, 0};
    CHECK(is_isomorphism(path_graph(3), path_graph(3), reverse));
}
