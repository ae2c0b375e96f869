#include "recolour/graph.hpp"

#include <algorithm>
#include <string>

#include "recolour/errors.hpp"

namespace recolour {

Graph::Graph(int vertex_count)
{
    if (vertex_count < 0)
        throw precondition_error("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count)
{
    for (const auto& e : edges) {
        check_vertex(e.u);
        check_vertex(e.v);
        if (e.u == e.v)
            throw precondition_error("self-loop at vertex " + std::to_string(e.u));
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

void Graph::check_vertex(vertex v) const
{
    if (v < 0 || v >= vertex_count())
        throw precondition_error("vertex " + std::to_string(v) + " out of range [0, " +
                                 std::to_string(vertex_count()) + ")");
}

bool Graph::adjacent(vertex u, vertex v) const
{
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::add_edge(vertex u, vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw precondition_error("self-loop at vertex " + std::to_string(u));
    auto& lu = adjacency_[u];
    auto it = std::lower_bound(lu.begin(), lu.end(), v);
    if (it != lu.end() && *it == v)
        return false;
    lu.insert(it, v);
    auto& lv = adjacency_[v];
    lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
    ++edge_count_;
    return true;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (vertex u = 0; u < vertex_count(); ++u)
        for (vertex v : adjacency_[u])
            if (u < v)
                out.push_back({u, v});
    return out;
}

std::vector<VertexSet> Graph::neighbour_sets() const
{
    std::vector<VertexSet> sets(adjacency_.size(), VertexSet(vertex_count()));
    for (vertex u = 0; u < vertex_count(); ++u)
        for (vertex v : adjacency_[u])
            sets[u].insert(v);
    return sets;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, edges);
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (vertex u = 0; u + 1 < n; ++u)
        edges.push_back({u, u + 1});
    return Graph(n, edges);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw precondition_error("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (vertex u = 0; u < n; ++u)
        edges.push_back({u, (u + 1) % n});
    return Graph(n, edges);
}

Graph petersen_graph()
{
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    std::vector<Edge> edges;
    for (vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
        edges.push_back({i, i + 5});
    }
    return Graph(10, edges);
}

Graph complement(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (vertex u = 0; u < n; ++u) {
        auto nb = g.neighbours(u);
        auto it = std::upper_bound(nb.begin(), nb.end(), u);
        for (vertex v = u + 1; v < n; ++v) {
            if (it != nb.end() && *it == v) {
                ++it;
                continue;
            }
            edges.push_back({u, v});
        }
    }
    return Graph(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const vertex> keep)
{
    const int n = g.vertex_count();
    InducedSubgraph out;
    out.new_id.assign(static_cast<std::size_t>(n), -1);
    for (vertex v : keep) {
        if (v < 0 || v >= n)
            throw precondition_error("vertex " + std::to_string(v) + " out of range");
        out.new_id[v] = 0;
    }
    for (vertex v = 0; v < n; ++v)
        if (out.new_id[v] != -1) {
            out.new_id[v] = static_cast<vertex>(out.old_id.size());
            out.old_id.push_back(v);
        }
    std::vector<Edge> edges;
    for (vertex u : out.old_id)
        for (vertex v : g.neighbours(u))
            if (u < v && out.new_id[v] != -1)
                edges.push_back({out.new_id[u], out.new_id[v]});
    out.graph = Graph(static_cast<int>(out.old_id.size()), edges);
    return out;
}

Graph substitute(const Graph& g, vertex v, const Graph& h)
{
    const int n = g.vertex_count();
    if (v < 0 || v >= n)
        throw precondition_error("substitution vertex " + std::to_string(v) + " out of range");
    if (h.vertex_count() == 0)
        throw precondition_error("cannot substitute an empty graph");

    auto renumber = [v](vertex u) { return u < v ? u : u - 1; };
    const vertex base = n - 1;
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (e.u != v && e.v != v)
            edges.push_back({renumber(e.u), renumber(e.v)});
    for (const auto& e : h.edges())
        edges.push_back({base + e.u, base + e.v});
    for (vertex u : g.neighbours(v))
        for (vertex x = 0; x < h.vertex_count(); ++x)
            edges.push_back({renumber(u), base + x});
    return Graph(base + h.vertex_count(), edges);
}

bool is_isomorphism(const Graph& g, const Graph& h, std::span<const vertex> mapping)
{
    const int n = g.vertex_count();
    if (h.vertex_count() != n || static_cast<int>(mapping.size()) != n ||
        g.edge_count() != h.edge_count())
        return false;
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (vertex m : mapping) {
        if (m < 0 || m >= n || hit[m])
            return false;
        hit[m] = 1;
    }
    // equal edge counts plus edge preservation gives non-edge preservation
    for (const auto& e : g.edges())
        if (!h.adjacent(mapping[e.u], mapping[e.v]))
            return false;
    return true;
}

bool is_clique(const Graph& g, std::span<const vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

bool is_stable(const Graph& g, std::span<const vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

} // namespace recolour
