#include "doctest.h"

#include "oracles.hpp"
#include "recolour/colouring.hpp"
#include "recolour/errors.hpp"
#include "recolour/exact.hpp"
#include "recolour/generators.hpp"
#include "recolour/gn_family.hpp"
#include "recolour/matching.hpp"
#include "recolour/structure.hpp"

using namespace recolour;

TEST_CASE("max_clique")
{
    CHECK(max_clique(complete_graph(4)) == std::vector<vertex>{0, 1, 2, 3});
    CHECK(max_clique(empty_graph(0)).empty());
    CHECK(max_clique(empty_graph(3)) == std::vector<vertex>{0});

    const auto g1 = build_g1().graph;
    const auto k1 = max_clique(g1);
    CHECK(k1.size() == 3);
    CHECK(is_clique(g1, k1));
    CHECK(k1 == std::vector<vertex>{0, 1, 2}); // least triangle: labels 1, 2, 3

    const auto g2 = build_gn(2).graph;
    const auto k2 = max_clique(g2);
    CHECK(k2.size() == 5);
    CHECK(is_clique(g2, k2));

    CHECK_THROWS_AS(max_clique(empty_graph(65)), limit_exceeded);
}

TEST_CASE("max_clique returns the lexicographically least maximum clique")
{
    Rng rng(4);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 10));
        const Graph g = random_graph(n, rng.uniform_real(), rng);
        // brute force over subsets in order of size, then lexicographic order
        std::vector<vertex> best;
        for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
            std::vector<vertex> s;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1U)
                    s.push_back(v);
            if (is_clique(g, s) && (s.size() > best.size() || (s.size() == best.size() && s < best)))
                best = s;
        }
        CHECK(max_clique(g) == best);
    }
}

TEST_CASE("chromatic_number_exact")
{
    auto check = [](const Graph& g, int expected) {
        const auto r = chromatic_number_exact(g);
        CHECK(r.chromatic_number == expected);
        CHECK(r.colouring.palette == expected);
        if (g.vertex_count() > 0) {
            CHECK(is_proper(g, r.colouring));
        }
    };
    check(cycle_graph(5), 3);
    check(complete_graph(4), 4);
    check(build_g1().graph, 3);
    check(empty_graph(0), 0);
    check(empty_graph(4), 1);
    check(petersen_graph(), 3);
    check(build_gn(2).graph, 5);
    CHECK_THROWS_AS(chromatic_number_exact(empty_graph(65)), limit_exceeded);
    CHECK(chromatic_number_exact(empty_graph(65), 65).chromatic_number == 1);
}

TEST_CASE("chromatic_number_exact matches the least k with a proper colouring")
{
    Rng rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = random_graph(static_cast<int>(rng.uniform_int(0, 8)), rng.uniform_real(), rng);
        CHECK(chromatic_number_exact(g).chromatic_number == oracle::chromatic_number_brute(g));
    }
}

TEST_CASE("max_matching")
{
    CHECK(max_matching(path_graph(4)).size() == 2);
    CHECK(max_matching(complete_graph(4)).size() == 2);
    CHECK(max_matching(petersen_graph()).size() == 5);
    CHECK(max_matching(empty_graph(0)).size() == 0);
    CHECK(max_matching(cycle_graph(5)).size() == 2);

    // a blossom must be contracted to find the augmenting path here
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {2, 6}};
    const Graph g(7, edges);
    const auto m = max_matching(g);
    CHECK(m.size() == 3);
    CHECK(is_matching(g, m));
}

TEST_CASE("max_matching is maximum on random graphs")
{
    Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = random_graph(static_cast<int>(rng.uniform_int(0, 8)), rng.uniform_real(), rng);
        const auto m = max_matching(g);
        CHECK(is_matching(g, m));
        CHECK(static_cast<int>(m.size()) == oracle::max_matching_size(g));
        CHECK(max_matching(g).pairs == m.pairs);
    }
}

TEST_CASE("optimal_colouring_3k1")
{
    const auto k3 = optimal_colouring_3k1(complete_graph(3));
    CHECK(k3.palette == 3);
    CHECK(k3.colours == std::vector<int>{1, 2, 3});

    const auto k2 = optimal_colouring_3k1(complete_graph(2));
    CHECK(k2.palette == 2);

    const auto c5 = optimal_colouring_3k1(cycle_graph(5));
    CHECK(c5.palette == 3);
    CHECK(is_proper(cycle_graph(5), c5));
    CHECK(c5.palette == 5 - oracle::max_matching_size(complement(cycle_graph(5))));

    CHECK_THROWS_AS(optimal_colouring_3k1(empty_graph(3)), precondition_error);
    CHECK(optimal_colouring_3k1(empty_graph(0)).palette == 0);
}

TEST_CASE("optimal_colouring_3k1 is optimal on random 3K1-free graphs")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Rng rng(seed);
        const int n = static_cast<int>(rng.uniform_int(1, 12));
        const Graph g = random_3k1_free(n, rng.uniform_real(), seed);
        const auto c = optimal_colouring_3k1(g);
        CHECK(is_proper(g, c));
        CHECK(colours_used(c) == c.palette);
        CHECK(c.palette == chromatic_number_exact(g).chromatic_number);
        for (const auto& cls : partition_of(c).classes)
            CHECK(cls.size() <= 2);
    }
}
