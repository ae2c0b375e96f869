#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"

namespace recolour {

/// Seeded generator whose outputs are identical on every platform: it uses
/// the raw std::mt19937_64 stream and its own bounded-integer and real maps.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// Uniform real in [0, 1) with 53 bits.
    double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return p >= 1.0 || uniform_real() < p; }

    template <class T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[static_cast<std::size_t>(uniform_int(0, i - 1))]);
    }

private:
    std::mt19937_64 engine_;
};

/// Complement of a random triangle-free graph. Vertex pairs are visited in a
/// random order; each is kept with probability edge_bias unless it would close
/// a triangle.
Graph random_3k1_free(int n, double edge_bias, std::uint64_t seed);

/// Chordal graph grown along a random perfect elimination ordering: each new
/// vertex joins, with probability `density`, a clique grown around a random
/// existing vertex, where each further neighbour joins the clique with
/// probability `density`. Vertex ids are then shuffled.
Graph random_chordal(int n, double density, std::uint64_t seed);

/// G(n, p) random graph.
Graph random_graph(int n, double p, Rng& rng);

/// Uniformly shuffled backtracking search for a proper k-colouring; throws
/// precondition_error if g is not k-colourable.
Colouring random_proper_colouring(const Graph& g, int k, Rng& rng);

} // namespace recolour
