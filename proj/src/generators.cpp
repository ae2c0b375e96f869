#include "recolour/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "recolour/errors.hpp"

namespace recolour {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi)
{
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0)
        return static_cast<std::int64_t>(next());
    // rejection keeps the draw unbiased
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

namespace {

void check_size(int n)
{
    if (n < 1)
        throw precondition_error("generator needs n >= 1, got " + std::to_string(n));
}

} // namespace

Graph random_3k1_free(int n, double edge_bias, std::uint64_t seed)
{
    check_size(n);
    Rng rng(seed);
    std::vector<Edge> pairs;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    rng.shuffle(pairs);

    Graph triangle_free(n);
    for (const auto& [u, v] : pairs) {
        if (!rng.bernoulli(edge_bias))
            continue;
        const auto nu = triangle_free.neighbours(u);
        const auto nv = triangle_free.neighbours(v);
        std::vector<vertex> common;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                              std::back_inserter(common));
        if (common.empty())
            triangle_free.add_edge(u, v);
    }
    return complement(triangle_free);
}

Graph random_chordal(int n, double density, std::uint64_t seed)
{
    check_size(n);
    Rng rng(seed);
    Graph g(n);
    for (vertex v = 1; v < n; ++v) {
        if (!rng.bernoulli(density))
            continue;
        const auto anchor = static_cast<vertex>(rng.uniform_int(0, v - 1));
        std::vector<vertex> clique{anchor};
        std::vector<vertex> others(g.neighbours(anchor).begin(), g.neighbours(anchor).end());
        rng.shuffle(others);
        for (vertex w : others) {
            if (!rng.bernoulli(density))
                continue;
            if (std::all_of(clique.begin(), clique.end(), [&](vertex u) { return g.adjacent(u, w); }))
                clique.push_back(w);
        }
        for (vertex u : clique)
            g.add_edge(u, v);
    }

    std::vector<vertex> relabel(static_cast<std::size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 0);
    rng.shuffle(relabel);
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        edges.push_back({relabel[e.u], relabel[e.v]});
    return Graph(n, edges);
}

Graph random_graph(int n, double p, Rng& rng)
{
    Graph g(n);
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                g.add_edge(u, v);
    return g;
}

Colouring random_proper_colouring(const Graph& g, int k, Rng& rng)
{
    const int n = g.vertex_count();
    std::vector<vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    std::vector<int> colours(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> options(static_cast<std::size_t>(n));
    std::vector<std::size_t> tried(static_cast<std::size_t>(n), 0);
    int depth = 0;
    bool fresh = true;
    while (depth >= 0 && depth < n) {
        const vertex v = order[depth];
        if (fresh) {
            options[depth].clear();
            for (int c = 1; c <= k; ++c)
                options[depth].push_back(c);
            rng.shuffle(options[depth]);
            tried[depth] = 0;
        }
        colours[v] = 0;
        bool placed = false;
        while (tried[depth] < options[depth].size()) {
            const int c = options[depth][tried[depth]++];
            const auto nb = g.neighbours(v);
            if (std::none_of(nb.begin(), nb.end(), [&](vertex u) { return colours[u] == c; })) {
                colours[v] = c;
                placed = true;
                break;
            }
        }
        if (placed) {
            ++depth;
            fresh = true;
        } else {
            --depth;
            fresh = false;
        }
    }
    if (depth < 0)
        throw precondition_error("graph is not " + std::to_string(k) + "-colourable");
    return Colouring{k, colours};
}

} // namespace recolour
