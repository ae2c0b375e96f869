#include "doctest.h"

#include "oracles.hpp"
#include "recolour/errors.hpp"
#include "recolour/generators.hpp"
#include "recolour/gn_family.hpp"
#include "recolour/structure.hpp"

using namespace recolour;

namespace {

Graph house()
{
    Graph g = cycle_graph(5);
    g.add_edge(0, 2);
    return g;
}

} // namespace

TEST_CASE("find_hole examples")
{
    const auto c6 = find_hole(cycle_graph(6));
    REQUIRE(c6);
    CHECK(c6->cycle == std::vector<vertex>{0, 1, 2, 3, 4, 5});
    CHECK(is_valid_hole(cycle_graph(6), *c6));

    CHECK(!find_hole(house()));
    CHECK(!find_hole(build_g1().graph));
    CHECK(!find_hole(cycle_graph(4)));
    CHECK(!find_hole(empty_graph(0)));
    CHECK(!find_hole(complete_graph(7)));
}

TEST_CASE("hole certificates are validated strictly")
{
    const Graph c5 = cycle_graph(5);
    CHECK(is_valid_hole(c5, {{0, 1, 2, 3, 4}}));
    CHECK(!is_valid_hole(c5, {{0, 1, 2, 3}}));
    CHECK(!is_valid_hole(c5, {{0, 2, 4, 1, 3}}));
    CHECK(!is_valid_hole(house(), {{0, 1, 2, 3, 4}}));
    CHECK(!is_valid_hole(c5, {{0, 1, 2, 3, 4, 0}}));
}

TEST_CASE("find_hole agrees with exhaustive chordless-cycle enumeration")
{
    Rng rng(0x5eed);
    int with_hole = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(3, 9));
        const double p = rng.uniform_real();
        const Graph g = random_graph(n, p, rng);
        const auto hole = find_hole(g);
        const bool expected = !oracle::chordless_cycles(g).empty();
        CHECK(hole.has_value() == expected);
        if (hole) {
            ++with_hole;
            CHECK(is_valid_hole(g, *hole));
        }
    }
    CHECK(with_hole > 20);
}

TEST_CASE("is_weakly_chordal")
{
    CHECK(is_weakly_chordal(cycle_graph(4)).is_weakly_chordal);
    CHECK(is_weakly_chordal(empty_graph(0)).is_weakly_chordal);

    const auto c5 = is_weakly_chordal(cycle_graph(5));
    CHECK(!c5.is_weakly_chordal);
    REQUIRE(c5.witness);
    CHECK(c5.witness->cycle.size() == 5);
    CHECK(!c5.witness_in_complement);
    CHECK(is_valid_hole(cycle_graph(5), *c5.witness));

    // the antihole on 7 vertices has no hole itself
    const Graph antihole = complement(cycle_graph(7));
    const auto v = is_weakly_chordal(antihole);
    CHECK(!v.is_weakly_chordal);
    CHECK(v.witness_in_complement);
    CHECK(is_valid_hole(complement(antihole), *v.witness));

    CHECK(is_weakly_chordal(build_gn(1).graph).is_weakly_chordal);
    CHECK(is_weakly_chordal(build_gn(2).graph).is_weakly_chordal);

    CHECK_THROWS_AS(is_weakly_chordal(empty_graph(65)), limit_exceeded);
    CHECK(is_weakly_chordal(empty_graph(65), 65).is_weakly_chordal);
}

TEST_CASE("substituting weakly chordal graphs stays weakly chordal")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Rng rng(seed);
        const Graph g = random_chordal(static_cast<int>(rng.uniform_int(1, 10)), rng.uniform_real(), seed * 2);
        const Graph h = random_chordal(static_cast<int>(rng.uniform_int(1, 10)), rng.uniform_real(), seed * 2 + 1);
        REQUIRE(is_weakly_chordal(g).is_weakly_chordal);
        REQUIRE(is_weakly_chordal(h).is_weakly_chordal);
        const auto v = static_cast<vertex>(rng.uniform_int(0, g.vertex_count() - 1));
        CHECK(is_weakly_chordal(substitute(g, v, h)).is_weakly_chordal);
        // complements of chordal graphs are weakly chordal too
        CHECK(is_weakly_chordal(substitute(complement(g), v, complement(h))).is_weakly_chordal);
    }
}

TEST_CASE("is_3k1_free")
{
    CHECK(is_3k1_free(complete_graph(2)).is_free);
    CHECK(is_3k1_free(cycle_graph(5)).is_free);
    CHECK(is_3k1_free(empty_graph(2)).is_free);
    CHECK(is_3k1_free(empty_graph(0)).is_free);
    CHECK(!is_3k1_free(empty_graph(3)).is_free);

    // least stable triple of G1: drawing labels {2, 4, 6}
    const auto g1 = is_3k1_free(build_g1().graph);
    CHECK(!g1.is_free);
    REQUIRE(g1.witness);
    CHECK(*g1.witness == std::array<vertex, 3>{1, 3, 5});
}

TEST_CASE("is_3k1_free iff the complement is triangle-free")
{
    Rng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = random_graph(static_cast<int>(rng.uniform_int(0, 9)), rng.uniform_real(), rng);
        const auto verdict = is_3k1_free(g);
        CHECK(verdict.is_free == !oracle::has_triangle(complement(g)));
        CHECK(verdict.witness == oracle::stable_triple(g));
    }
}
