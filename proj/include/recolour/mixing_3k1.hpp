#pragma once

#include <optional>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"

// Recolouring between (k+1)-colourings of a k-colourable 3K1-free graph in at
// most 4|V| steps. Both endpoints are first normalized onto the class
// partition of one optimal colouring (each vertex recoloured at most once),
// then the two normalized colourings are renamed into each other with the
// spare colour (each vertex at most twice).
//
// Tie-breaking is always least colour, least class index, least vertex id.

namespace recolour {

struct RareColourVerdict {
    int colour = 0;
    int multiplicity = 0; // 0 or 1
    std::optional<vertex> vertex_id;
};

/// Least colour of the palette that is unused, else the least colour used on
/// exactly one vertex. Such a colour exists whenever c is proper, g is
/// 3K1-free and c.palette >= chi(g) + 1; precondition_error otherwise.
RareColourVerdict rare_colour(const Graph& g, const Colouring& c);

struct NormalizationTrace {
    std::vector<RecolouringStep> steps;
    std::vector<int> recolour_counts;
    Colouring result;
};

/// Recolours `start` until its colour classes are exactly `target`, touching
/// each vertex at most once.
///
/// On the current subgraph H and palette P: stop if the classes on H already
/// match; otherwise take a rare colour c of P on H. If c sits on a single
/// vertex u, move u's target partner (if any) to c. If c is unused, move the
/// least vertex u of the least class that is not a target class to c, then
/// u's partner. Drop u's target class from H and c from P, and repeat.
///
/// Requires g 3K1-free, start proper with palette >= |target| + 1, and target
/// a partition of V(g) into stable sets of size at most two.
NormalizationTrace normalize_to_partition(const Graph& g, const Colouring& start,
                                          const Partition& target);

/// Steps turning `from` into `to` when both are proper, share a palette and
/// induce the same partition with fewer classes than colours.
///
/// A mismatched class whose target colour is free moves there; when none is,
/// the mismatched classes form colour cycles and the least-indexed one is
/// parked on the least free colour. Each vertex moves at most twice.
std::vector<RecolouringStep> rename_partition(const Graph& g, const Colouring& from,
                                              const Colouring& to);

/// Walk in R_{k+1}(g) from alpha to beta of length at most 4|V(g)|: normalize
/// alpha, rename, then undo the normalization of beta. The whole walk is
/// replayed before returning. Precondition failures name the failing stage.
RecolouringSequence recolour_path_3k1(const Graph& g, const Colouring& alpha,
                                      const Colouring& beta);

} // namespace recolour
