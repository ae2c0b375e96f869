#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "recolour/errors.hpp"
#include "recolour/exact.hpp"
#include "recolour/generators.hpp"
#include "recolour/matching.hpp"
#include "recolour/mixing_3k1.hpp"
#include "recolour/recolouring.hpp"

using namespace recolour;

namespace {

struct Instance {
    Graph g;
    int chi;
    int palette;
};

Instance random_instance(std::uint64_t seed, int max_n, int extra_colours)
{
    Rng rng(seed);
    const int n = static_cast<int>(rng.uniform_int(1, max_n));
    Graph g = random_3k1_free(n, rng.uniform_real(), seed ^ 0x9e3779b97f4a7c15ULL);
    const int chi = chromatic_number_exact(g).chromatic_number;
    const int palette = chi + 1 + static_cast<int>(rng.uniform_int(0, extra_colours));
    return {std::move(g), chi, palette};
}

// Colours the classes of p with distinct random colours from 1..palette.
Colouring random_naming(const Partition& p, int n, int palette, Rng& rng)
{
    std::vector<int> names(static_cast<std::size_t>(palette));
    std::iota(names.begin(), names.end(), 1);
    rng.shuffle(names);
    Colouring c{palette, std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (std::size_t i = 0; i < p.classes.size(); ++i)
        for (vertex v : p.classes[i])
            c.colours[v] = names[i];
    return c;
}

} // namespace

TEST_CASE("rare_colour examples")
{
    const auto k2 = rare_colour(complete_graph(2), {3, {1, 2}});
    CHECK(k2.colour == 3);
    CHECK(k2.multiplicity == 0);
    CHECK(!k2.vertex_id);

    const Graph c4 = cycle_graph(4);
    const auto unused = rare_colour(c4, {3, {1, 2, 1, 2}});
    CHECK(unused.colour == 3);
    CHECK(unused.multiplicity == 0);

    const auto single = rare_colour(c4, {3, {1, 2, 3, 2}});
    CHECK(single.colour == 1);
    CHECK(single.multiplicity == 1);
    CHECK(single.vertex_id == 0);

    CHECK_THROWS_AS(rare_colour(c4, {2, {1, 2, 1, 2}}), precondition_error);
    CHECK_THROWS_AS(rare_colour(empty_graph(3), {3, {1, 2, 3}}), precondition_error);
    CHECK_THROWS_AS(rare_colour(c4, {3, {1, 1, 2, 3}}), precondition_error);
}

TEST_CASE("rare_colour exists for every palette above the chromatic number")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto inst = random_instance(seed, 14, 2);
        Rng rng(seed + 1000);
        const auto c = random_proper_colouring(inst.g, inst.palette, rng);
        const auto r = rare_colour(inst.g, c);
        const auto uses = std::count(c.colours.begin(), c.colours.end(), r.colour);
        CHECK(uses == r.multiplicity);
        CHECK(r.multiplicity <= 1);
        if (r.vertex_id)
            CHECK(c.colours[*r.vertex_id] == r.colour);
    }
}

TEST_CASE("normalize_to_partition examples")
{
    const Graph p3 = path_graph(3);
    const Partition target{{{0, 2}, {1}}};
    CHECK(normalize_to_partition(p3, {3, {1, 2, 1}}, target).steps.empty());

    const Graph c4 = cycle_graph(4);
    const Partition halves{{{0, 2}, {1, 3}}};
    const Colouring start{3, {1, 2, 3, 2}};
    const auto trace = normalize_to_partition(c4, start, halves);
    CHECK(trace.steps == std::vector<RecolouringStep>{{2, 1}});
    const auto replay = apply_sequence(c4, start, trace.steps);
    CHECK(partition_of(replay.final_colouring) == halves);
    CHECK(replay.final_colouring == trace.result);
    CHECK(*std::max_element(trace.recolour_counts.begin(), trace.recolour_counts.end()) <= 1);

    // an unused colour: the first mismatched class is moved onto it
    const auto moved = normalize_to_partition(c4, {4, {1, 2, 3, 2}}, halves);
    CHECK(moved.steps == std::vector<RecolouringStep>{{0, 4}, {2, 4}});
    CHECK(partition_of(moved.result) == halves);
}

TEST_CASE("normalize_to_partition rejects bad input")
{
    const Graph c4 = cycle_graph(4);
    const Colouring start{3, {1, 2, 3, 2}};
    CHECK_THROWS_AS(normalize_to_partition(c4, start, {{{0, 1}, {2, 3}}}), precondition_error);
    CHECK_THROWS_AS(normalize_to_partition(c4, start, {{{0, 2}, {1}}}), precondition_error);
    CHECK_THROWS_AS(normalize_to_partition(c4, start, {{{0, 2}, {1}, {3}}}), precondition_error);
    CHECK_THROWS_AS(normalize_to_partition(c4, {2, {1, 2, 1, 2}}, {{{0, 2}, {1, 3}}}),
                    precondition_error);
    CHECK_THROWS_AS(normalize_to_partition(empty_graph(3), {1, {1, 1, 1}}, {{{0}, {1}, {2}}}),
                    precondition_error);
}

TEST_CASE("normalize_to_partition recolours each vertex at most once")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto inst = random_instance(seed, 14, 2);
        Rng rng(seed + 5000);
        const auto start = random_proper_colouring(inst.g, inst.palette, rng);
        const auto target = partition_of(random_proper_colouring(inst.g, inst.chi, rng));
        const auto trace = normalize_to_partition(inst.g, start, target);
        const auto replay = apply_sequence(inst.g, start, trace.steps);
        CHECK(partition_of(replay.final_colouring) == target);
        CHECK(replay.recolour_counts == trace.recolour_counts);
        for (int count : trace.recolour_counts)
            CHECK(count <= 1);
    }
}

TEST_CASE("rename_partition examples")
{
    const Graph p3 = path_graph(3);
    CHECK(rename_partition(p3, {3, {1, 2, 1}}, {3, {1, 2, 1}}).empty());

    const Colouring from{3, {1, 2, 1}};
    const Colouring to{3, {2, 1, 2}};
    const auto steps = rename_partition(p3, from, to);
    CHECK(steps == std::vector<RecolouringStep>{{0, 3}, {2, 3}, {1, 1}, {0, 2}, {2, 2}});
    const auto r = apply_sequence(p3, from, steps);
    CHECK(r.final_colouring == to);
    CHECK(*std::max_element(r.recolour_counts.begin(), r.recolour_counts.end()) <= 2);
    // never shorter than the distance in R_3(P3)
    CHECK(static_cast<int>(steps.size()) >= *bfs_distance(p3, from, to));

    CHECK_THROWS_AS(rename_partition(p3, {2, {1, 2, 1}}, {2, {2, 1, 2}}), precondition_error);
    CHECK_THROWS_AS(rename_partition(p3, {3, {1, 2, 3}}, {3, {2, 1, 2}}), precondition_error);
    CHECK_THROWS_AS(rename_partition(p3, {3, {1, 2, 1}}, {4, {2, 1, 2}}), precondition_error);
}

TEST_CASE("rename_partition recolours each vertex at most twice")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto inst = random_instance(seed, 14, 2);
        Rng rng(seed + 9000);
        const auto p = partition_of(random_proper_colouring(inst.g, inst.chi, rng));
        const int n = inst.g.vertex_count();
        const auto from = random_naming(p, n, inst.palette, rng);
        const auto to = random_naming(p, n, inst.palette, rng);
        const auto steps = rename_partition(inst.g, from, to);
        const auto r = apply_sequence(inst.g, from, steps);
        CHECK(r.final_colouring == to);
        for (int count : r.recolour_counts)
            CHECK(count <= 2);
    }
}

TEST_CASE("recolour_path_3k1 examples")
{
    const Graph k2 = complete_graph(2);
    CHECK(recolour_path_3k1(k2, {3, {1, 2}}, {3, {1, 2}}).steps.empty());

    const auto seq = recolour_path_3k1(k2, {3, {1, 2}}, {3, {2, 1}});
    CHECK(seq.steps.size() >= 3);
    CHECK(seq.steps.size() <= 8);
    CHECK(apply_sequence(k2, seq).final_colouring == Colouring{3, {2, 1}});

    auto message_of = [](auto&& fn) -> std::string {
        try {
            fn();
        } catch (const precondition_error& e) {
            return e.what();
        }
        return {};
    };
    CHECK(message_of([&] { recolour_path_3k1(k2, {2, {1, 2}}, {2, {2, 1}}); }).rfind("input:", 0) == 0);
    CHECK(message_of([&] { recolour_path_3k1(k2, {3, {1, 2}}, {4, {2, 1}}); }).rfind("input:", 0) == 0);
    CHECK(message_of([&] { recolour_path_3k1(empty_graph(3), {2, {1, 1, 1}}, {2, {1, 1, 1}}); })
              .rfind("input:", 0) == 0);
}

TEST_CASE("recolour_path_3k1 stays within 4|V|")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto inst = random_instance(seed, 14, 1);
        Rng rng(seed + 77);
        const auto alpha = random_proper_colouring(inst.g, inst.palette, rng);
        const auto beta = random_proper_colouring(inst.g, inst.palette, rng);
        const auto seq = recolour_path_3k1(inst.g, alpha, beta);
        const auto r = apply_sequence(inst.g, seq);
        CHECK(r.final_colouring == beta);
        CHECK(seq.steps.size() <= 4 * static_cast<std::size_t>(inst.g.vertex_count()));
        for (int count : r.recolour_counts)
            CHECK(count <= 4);
        // identical on a second run
        CHECK(recolour_path_3k1(inst.g, alpha, beta).steps == seq.steps);
        if (inst.g.vertex_count() <= 8) {
            const auto d = bfs_distance(inst.g, alpha, beta);
            REQUIRE(d);
            CHECK(static_cast<int>(seq.steps.size()) >= *d);
        }
    }
}
