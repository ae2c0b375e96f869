#pragma once

#include <vector>

#include "recolour/graph.hpp"

namespace recolour {

/// A total vertex -> colour map with colours named 1..palette.
struct Colouring {
    int palette = 0;
    std::vector<int> colours;

    int colour(vertex v) const { return colours[v]; }
    bool operator==(const Colouring&) const = default;
};

/// Colour classes with names forgotten. Each class is sorted; classes are
/// ordered by least member.
struct Partition {
    std::vector<std::vector<vertex>> classes;

    bool operator==(const Partition&) const = default;
};

struct RecolouringStep {
    vertex v;
    int to;

    bool operator==(const RecolouringStep&) const = default;
};

/// A walk in R_k(G): the start colouring and the single-vertex changes
/// applied to it in order.
struct RecolouringSequence {
    Colouring start;
    std::vector<RecolouringStep> steps;
};

/// Throws precondition_error unless c assigns every vertex of g a colour in
/// 1..c.palette.
void check_assignment(const Graph& g, const Colouring& c);

bool is_proper(const Graph& g, const Colouring& c);

/// Every closed neighbourhood sees all palette colours. Rejects improper input.
bool is_frozen(const Graph& g, const Colouring& c);

/// Number of distinct colours actually used.
int colours_used(const Colouring& c);

Partition partition_of(const Colouring& c);

/// Puts each class in sorted order and the classes in order of least member.
Partition canonical(Partition p);

/// Colours class i with colour i + 1.
Colouring colouring_from_partition(const Partition& p, int vertex_count, int palette);

/// Renames colour a to b and b to a.
Colouring swap_colours(Colouring c, int a, int b);

} // namespace recolour
