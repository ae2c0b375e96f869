#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"
#include "recolour/structure.hpp"

// The weakly chordal family G_n with frozen (3n+1)-colourings although
// chi(G_n) = 2n+1.
//
// G_n has four hubs w, x, y, z forming the 4-cycle w-x-z-y-w (wz and xy are
// non-edges) and four pairwise anticomplete blobs B_w, B_x, B_y, B_z, each a
// copy of G_{n-1}. Hub h is complete to every blob except B_h and
// anticomplete to B_h. G_0 is a single vertex, so the blobs of G_1 are single
// vertices.
//
// build_gn lays vertices out as w, x, y, z, B_w, B_x, B_y, B_z with each blob
// laid out recursively. build_g1 instead uses the numbering of the original
// drawing of G_1 shifted to 0-indexed ids (drawing label i is vertex i - 1).

namespace recolour {

// (7 * 4^n - 4) / 3 for n = 6
inline constexpr std::size_t default_gn_vertex_limit = 9556;

enum hub : int { hub_w = 0, hub_x = 1, hub_y = 2, hub_z = 3 };

struct BlobRange {
    vertex first = 0;
    int size = 0;

    bool contains(vertex v) const { return v >= first && v < first + size; }
};

struct GnStructure {
    int level = 0;
    Graph graph;
    std::array<vertex, 4> hubs{};   // w, x, y, z
    std::array<BlobRange, 4> blobs; // B_w, B_x, B_y, B_z
    // layout of every blob, shared by the four copies; null when blobs are single vertices
    std::shared_ptr<const GnStructure> inner;
};

/// |V(G_n)| = 4 + 4 |V(G_{n-1})| with |V(G_0)| = 1.
std::size_t gn_vertex_count(int n);
std::size_t gn_edge_count(int n);

/// G_1 with the 16 edges of the original drawing, 0-indexed.
GnStructure build_g1();
GnStructure build_gn(int n, std::size_t vertex_limit = default_gn_vertex_limit);

/// build_gn(1) vertex i corresponds to build_g1 vertex g1_from_gn1[i].
inline constexpr std::array<vertex, 8> g1_from_gn1{0, 2, 4, 7, 6, 5, 1, 3};

/// The 3-colouring and frozen 4-colouring drawn for G_1 (build_g1 numbering).
Colouring g1_colouring();
Colouring g1_frozen_colouring();

/// (2n+1)-colouring: every blob coloured by colour_gn(n-1), hubs w, z get 2n
/// and x, y get 2n+1.
Colouring colour_gn(int n, std::size_t vertex_limit = default_gn_vertex_limit);

/// Clique of size 2n+1: the clique of B_z plus {w, x}.
std::vector<vertex> clique_gn(int n, std::size_t vertex_limit = default_gn_vertex_limit);

/// Frozen (3n+1)-colouring. Hubs (w, x, y, z) get (3n-2, 3n-1, 3n, 3n+1);
/// B_w carries the level n-1 frozen colouring and B_x, B_y, B_z carry it with
/// its top colour 3n-2 renamed to 3n-1, 3n and 3n+1.
Colouring frozen_colouring_gn(int n, std::size_t vertex_limit = default_gn_vertex_limit);

enum class CheckStatus { passed, failed, skipped };

std::string to_string(CheckStatus s);

struct CounterexampleCheck {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
};

struct CounterexampleReport {
    int n = 0;
    int k = 0; // 2n + 1
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::vector<CounterexampleCheck> checks;
    std::optional<WeaklyChordalVerdict> weakly_chordal;

    bool passed() const;
};

struct CounterexampleOptions {
    std::size_t gn_vertex_limit = default_gn_vertex_limit;
    // the weakly chordal sub-check runs only when |V(G_n)| is within this bound
    int weakly_chordal_vertex_limit = default_weakly_chordal_vertex_limit;
};

/// Checks, for k = 2n+1: (a) colour_gn is a proper k-colouring, (b) clique_gn
/// is a clique of size k, (c) frozen_colouring_gn is a proper frozen
/// (k+n)-colouring, (d) a second proper (k+n)-colouring exists, so
/// R_{k+n}(G_n) is disconnected, and (e) G_n is weakly chordal when small
/// enough to test.
CounterexampleReport verify_counterexample(int n, const CounterexampleOptions& options = {});

} // namespace recolour
