#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "recolour/vertex_set.hpp"

namespace recolour {

using vertex = int;

struct Edge {
    vertex u;
    vertex v;

    auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Construction rejects self-loops and out-of-range endpoints with
/// precondition_error. Repeated edges are merged by the constructor and
/// reported by add_edge's return value.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const vertex> neighbours(vertex v) const { return adjacency_[v]; }
    int degree(vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    bool adjacent(vertex u, vertex v) const;

    /// Returns false if the edge was already present.
    bool add_edge(vertex u, vertex v);

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Open neighbourhoods as bitsets; index v holds N(v).
    std::vector<VertexSet> neighbour_sets() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(vertex v) const;

    std::vector<std::vector<vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph petersen_graph();

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    // old id -> new id, -1 for dropped vertices
    std::vector<vertex> new_id;
    // new id -> old id, ascending
    std::vector<vertex> old_id;
};

/// Keeps the vertices of `keep` (any order, duplicates ignored); surviving
/// vertices are renumbered in increasing order of their old ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const vertex> keep);

/// Replaces v by h, joining every vertex of h to every former neighbour of v.
/// Vertices of g - v keep their relative order; h's vertices are appended in
/// their own order.
Graph substitute(const Graph& g, vertex v, const Graph& h);

/// True iff `mapping` (g id -> h id) is a bijection preserving adjacency and
/// non-adjacency.
bool is_isomorphism(const Graph& g, const Graph& h, std::span<const vertex> mapping);

bool is_clique(const Graph& g, std::span<const vertex> vertices);
bool is_stable(const Graph& g, std::span<const vertex> vertices);

} // namespace recolour
