#pragma once

#include <array>
#include <optional>
#include <vector>

#include "recolour/graph.hpp"

namespace recolour {

inline constexpr int default_weakly_chordal_vertex_limit = 64;

/// A chordless cycle on at least five vertices, in cyclic order.
struct HoleCertificate {
    std::vector<vertex> cycle;
};

/// True iff the cycle has >= 5 distinct vertices, consecutive ones adjacent
/// and all other pairs non-adjacent.
bool is_valid_hole(const Graph& g, const HoleCertificate& hole);

/// Hole search by induced-P4 scan.
///
/// For every induced path a-b-c-d, taken in lexicographic order of
/// (a, b, c, d), the vertices of (N[b] | N[c]) other than a and d are
/// deleted; a shortest d..a path in what remains closes a hole a-b-c-d-...-a.
/// The first such path found is returned, so output is deterministic.
///
/// Throws limit_exceeded when g has more than vertex_limit vertices.
std::optional<HoleCertificate> find_hole(const Graph& g,
                                         int vertex_limit = default_weakly_chordal_vertex_limit);

struct WeaklyChordalVerdict {
    bool is_weakly_chordal = true;
    std::optional<HoleCertificate> witness;
    // witness is a hole of complement(g), i.e. g contains an antihole
    bool witness_in_complement = false;
};

/// Hole test on g, then on its complement.
WeaklyChordalVerdict is_weakly_chordal(const Graph& g,
                                       int vertex_limit = default_weakly_chordal_vertex_limit);

struct ThreeK1Verdict {
    bool is_free = true;
    // lexicographically least stable triple when not free
    std::optional<std::array<vertex, 3>> witness;
};

ThreeK1Verdict is_3k1_free(const Graph& g);

} // namespace recolour
