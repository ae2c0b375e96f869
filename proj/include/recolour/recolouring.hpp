#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"

namespace recolour {

struct ExplorationLimits {
    // colourings materialized by enumeration or visited by a BFS
    std::size_t max_colourings = 2'000'000;
    // components larger than this get no diameter
    std::size_t max_diameter_states = 20'000;
};

/// All proper k-colourings by backtracking in vertex order with colours
/// ascending; the list is therefore in lexicographic order. Throws
/// limit_exceeded (carrying the partial count) once more than `limit`
/// colourings exist.
std::vector<Colouring> enumerate_colourings(const Graph& g, int k, std::size_t limit);

/// Colouring codes are fixed-radix integers with vertex 0 most significant,
/// digit colour - 1. Lexicographic order of colourings is numeric order of codes.
std::uint64_t encode(const Colouring& c);
Colouring decode(std::uint64_t code, int vertex_count, int k);

struct RecolouringGraphSummary {
    int k = 0;
    std::size_t colouring_count = 0;
    std::size_t component_count = 0;
    std::vector<std::size_t> component_sizes;
    std::size_t frozen_count = 0;
    // nullopt when the component exceeded max_diameter_states
    std::vector<std::optional<int>> diameters;
    bool is_mixing = true;

    /// Component index of a proper k-colouring, or nullopt if c is not one.
    std::optional<std::size_t> component_of(const Colouring& c) const;

    // sorted codes of all colourings and their component ids
    std::vector<std::uint64_t> codes;
    std::vector<std::uint32_t> component;
};

/// Explores R_k(g) exhaustively: components by BFS in code order, per-component
/// diameters by BFS from every state, and frozen colourings. A graph with no
/// k-colourings has zero components and counts as mixing.
RecolouringGraphSummary recolouring_graph(const Graph& g, int k,
                                          const ExplorationLimits& limits = {});

/// Proper k-colourings reachable from c in one step, in order of (vertex, colour).
std::vector<RecolouringStep> available_steps(const Graph& g, const Colouring& c);

/// Shortest-path length between a and b in R_k(g), or nullopt if they lie in
/// different components. Throws limit_exceeded if the search visits more than
/// limits.max_colourings states.
std::optional<int> bfs_distance(const Graph& g, const Colouring& a, const Colouring& b,
                                const ExplorationLimits& limits = {});

struct SequenceResult {
    Colouring final_colouring;
    std::vector<int> recolour_counts;
};

/// Replays steps from start. Throws sequence_error with the index of the
/// first step that is a no-op, leaves the palette or makes the colouring
/// improper; throws precondition_error if start itself is improper.
SequenceResult apply_sequence(const Graph& g, const Colouring& start,
                              const std::vector<RecolouringStep>& steps);

inline SequenceResult apply_sequence(const Graph& g, const RecolouringSequence& seq)
{
    return apply_sequence(g, seq.start, seq.steps);
}

} // namespace recolour
