#pragma once

#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"

namespace recolour {

inline constexpr int default_exact_vertex_limit = 64;

/// Maximum clique by branch and bound with a greedy-colouring bound.
/// Among maximum cliques the lexicographically least (sorted) one is returned.
std::vector<vertex> max_clique(const Graph& g, int vertex_limit = default_exact_vertex_limit);

struct ChromaticResult {
    int chromatic_number = 0;
    Colouring colouring;
};

/// Exact chromatic number: DSATUR backtracking for k = omega, omega + 1, ...
/// with the maximum clique pre-coloured 1..omega. The branching vertex has
/// maximum saturation, then maximum degree, then least id; colours are tried
/// in ascending order, so the witness is deterministic.
ChromaticResult chromatic_number_exact(const Graph& g,
                                       int vertex_limit = default_exact_vertex_limit);

} // namespace recolour
