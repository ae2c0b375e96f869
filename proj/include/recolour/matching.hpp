#pragma once

#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"

namespace recolour {

/// Disjoint edges of a host graph, each stored with u < v, sorted.
struct Matching {
    std::vector<Edge> pairs;

    std::size_t size() const noexcept { return pairs.size(); }
};

/// True iff every pair is an edge of g and no vertex is covered twice.
bool is_matching(const Graph& g, const Matching& m);

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// algorithm, O(n^3)). Roots are tried in vertex order and neighbours are
/// scanned in ascending order, so the result is reproducible.
Matching max_matching(const Graph& g);

/// Optimal colouring of a 3K1-free graph. Colour classes are the pairs of a
/// maximum matching of the complement plus singletons for unmatched vertices,
/// numbered 1.. in order of least member. Throws precondition_error if g has a
/// stable set of size three.
Colouring optimal_colouring_3k1(const Graph& g);

} // namespace recolour
