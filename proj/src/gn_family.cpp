#include "recolour/gn_family.hpp"

#include <algorithm>

#include "recolour/errors.hpp"

namespace recolour {

namespace {

// Hub-hub edges: the 4-cycle w-x-z-y-w.
constexpr std::array<std::array<int, 2>, 4> hub_cycle{{{hub_w, hub_x},
                                                       {hub_x, hub_z},
                                                       {hub_z, hub_y},
                                                       {hub_y, hub_w}}};

void check_level(int n, std::size_t vertex_limit)
{
    if (n < 1)
        throw precondition_error("G_n is defined for n >= 1, got " + std::to_string(n));
    // |V(G_n)| grows by a factor of about 4, so n <= 30 keeps the count in range
    if (n > 30 || gn_vertex_count(n) > vertex_limit)
        throw limit_exceeded("G_" + std::to_string(n) + " exceeds the limit of " +
                             std::to_string(vertex_limit) + " vertices");
}

void append_edges(int n, vertex offset, std::vector<Edge>& edges)
{
    if (n == 0)
        return;
    const auto blob_size = static_cast<vertex>(gn_vertex_count(n - 1));
    for (const auto& [a, b] : hub_cycle)
        edges.push_back({offset + a, offset + b});
    for (int h = 0; h < 4; ++h)
        for (int b = 0; b < 4; ++b) {
            if (b == h)
                continue;
            const vertex first = offset + 4 + b * blob_size;
            for (vertex i = 0; i < blob_size; ++i)
                edges.push_back({offset + h, first + i});
        }
    for (int b = 0; b < 4; ++b)
        append_edges(n - 1, offset + 4 + b * blob_size, edges);
}

std::vector<int> canonical_colours(int n)
{
    if (n == 0)
        return {1};
    const auto inner = canonical_colours(n - 1);
    std::vector<int> out{2 * n, 2 * n + 1, 2 * n + 1, 2 * n};
    for (int b = 0; b < 4; ++b)
        out.insert(out.end(), inner.begin(), inner.end());
    return out;
}

std::vector<int> frozen_colours(int n)
{
    if (n == 0)
        return {1};
    const auto inner = frozen_colours(n - 1);
    const int top = 3 * n - 2; // palette size of the inner colouring
    std::vector<int> out{3 * n - 2, 3 * n - 1, 3 * n, 3 * n + 1};
    for (int b = 0; b < 4; ++b) {
        const int rename_to = top + b;
        for (int c : inner)
            out.push_back(c == top ? rename_to : c);
    }
    return out;
}

std::vector<vertex> canonical_clique(int n)
{
    if (n == 0)
        return {0};
    const auto blob_size = static_cast<vertex>(gn_vertex_count(n - 1));
    std::vector<vertex> out{hub_w, hub_x};
    for (vertex v : canonical_clique(n - 1))
        out.push_back(4 + hub_z * blob_size + v);
    return out;
}

GnStructure structure_of(int n)
{
    GnStructure s;
    s.level = n;
    std::vector<Edge> edges;
    edges.reserve(gn_edge_count(n));
    append_edges(n, 0, edges);
    s.graph = Graph(static_cast<int>(gn_vertex_count(n)), edges);
    s.hubs = {hub_w, hub_x, hub_y, hub_z};
    const auto blob_size = static_cast<int>(gn_vertex_count(n - 1));
    for (int b = 0; b < 4; ++b)
        s.blobs[b] = {4 + b * blob_size, blob_size};
    if (n >= 2)
        s.inner = std::make_shared<const GnStructure>(structure_of(n - 1));
    return s;
}

} // namespace

std::size_t gn_vertex_count(int n)
{
    std::size_t count = 1;
    for (int i = 1; i <= n; ++i)
        count = 4 + 4 * count;
    return count;
}

std::size_t gn_edge_count(int n)
{
    std::size_t edges = 0;
    for (int i = 1; i <= n; ++i)
        edges = 4 + 12 * gn_vertex_count(i - 1) + 4 * edges;
    return edges;
}

GnStructure build_g1()
{
    // drawing labels 1..8, shifted down by one
    static constexpr std::array<std::array<int, 2>, 16> drawn{{{1, 2}, {1, 3}, {1, 4}, {1, 5},
                                                              {1, 6}, {2, 3}, {2, 8}, {3, 4},
                                                              {3, 7}, {3, 8}, {4, 5}, {5, 6},
                                                              {5, 7}, {5, 8}, {6, 8}, {7, 8}}};
    std::vector<Edge> edges;
    for (const auto& [a, b] : drawn)
        edges.push_back({a - 1, b - 1});

    GnStructure s;
    s.level = 1;
    s.graph = Graph(8, edges);
    // w, x, y, z = labels 1, 3, 5, 8; B_w, B_x, B_y, B_z = labels 7, 6, 2, 4
    s.hubs = {0, 2, 4, 7};
    s.blobs = {BlobRange{6, 1}, BlobRange{5, 1}, BlobRange{1, 1}, BlobRange{3, 1}};
    return s;
}

GnStructure build_gn(int n, std::size_t vertex_limit)
{
    check_level(n, vertex_limit);
    return structure_of(n);
}

Colouring g1_colouring() { return {3, {2, 1, 3, 1, 3, 1, 1, 2}}; }

Colouring g1_frozen_colouring() { return {4, {1, 4, 2, 3, 4, 2, 1, 3}}; }

Colouring colour_gn(int n, std::size_t vertex_limit)
{
    check_level(n, vertex_limit);
    return {2 * n + 1, canonical_colours(n)};
}

std::vector<vertex> clique_gn(int n, std::size_t vertex_limit)
{
    check_level(n, vertex_limit);
    auto clique = canonical_clique(n);
    std::sort(clique.begin(), clique.end());
    return clique;
}

Colouring frozen_colouring_gn(int n, std::size_t vertex_limit)
{
    check_level(n, vertex_limit);
    return {3 * n + 1, frozen_colours(n)};
}

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::passed:
        return "pass";
    case CheckStatus::failed:
        return "fail";
    case CheckStatus::skipped:
        return "skipped";
    }
    return "unknown";
}

bool CounterexampleReport::passed() const
{
    return std::none_of(checks.begin(), checks.end(),
                        [](const auto& c) { return c.status == CheckStatus::failed; });
}

namespace {

CounterexampleCheck outcome(std::string name, bool ok, std::string detail)
{
    return {std::move(name), ok ? CheckStatus::passed : CheckStatus::failed, std::move(detail)};
}

std::string first_clash(const Graph& g, const Colouring& c)
{
    for (const auto& e : g.edges())
        if (c.colours[e.u] == c.colours[e.v])
            return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                   " is monochromatic (colour " + std::to_string(c.colours[e.u]) + ")";
    return {};
}

} // namespace

CounterexampleReport verify_counterexample(int n, const CounterexampleOptions& options)
{
    const GnStructure gn = build_gn(n, options.gn_vertex_limit);
    const Graph& g = gn.graph;
    CounterexampleReport r;
    r.n = n;
    r.k = 2 * n + 1;
    r.vertex_count = static_cast<std::size_t>(g.vertex_count());
    r.edge_count = g.edge_count();

    const Colouring c = colour_gn(n, options.gn_vertex_limit);
    const bool c_proper = is_proper(g, c);
    const int used = colours_used(c);
    r.checks.push_back(outcome("k-colouring", c_proper && c.palette == r.k && used == r.k,
                               c_proper ? "proper, " + std::to_string(used) + " colours used"
                                        : first_clash(g, c)));

    const auto clique = clique_gn(n, options.gn_vertex_limit);
    const bool clique_ok = is_clique(g, clique) && static_cast<int>(clique.size()) == r.k;
    r.checks.push_back(outcome("k-clique", clique_ok,
                               "size " + std::to_string(clique.size()) +
                                   (is_clique(g, clique) ? ", pairwise adjacent"
                                                         : ", not pairwise adjacent")));

    const Colouring f = frozen_colouring_gn(n, options.gn_vertex_limit);
    const bool f_proper = is_proper(g, f);
    bool f_frozen = false;
    std::string f_detail;
    if (!f_proper) {
        f_detail = first_clash(g, f);
    } else {
        f_frozen = is_frozen(g, f);
        f_detail = f_frozen ? "proper and frozen with " + std::to_string(f.palette) + " colours"
                            : "proper but not frozen";
    }
    r.checks.push_back(outcome("frozen (k+n)-colouring",
                               f_proper && f_frozen && f.palette == r.k + n, f_detail));

    // Any relabelling of a proper colouring is proper; distinct from f because
    // colours 1 and 2 are both used.
    const Colouring other = swap_colours(f, 1, 2);
    const bool other_ok = f_proper && is_proper(g, other) && other != f;
    r.checks.push_back(outcome("second (k+n)-colouring", other_ok,
                               other_ok ? "colours 1 and 2 swapped; R_" +
                                              std::to_string(r.k + n) + "(G_" + std::to_string(n) +
                                              ") is disconnected"
                                        : "no distinct proper relabelling"));

    if (g.vertex_count() <= options.weakly_chordal_vertex_limit) {
        r.weakly_chordal = is_weakly_chordal(g, options.weakly_chordal_vertex_limit);
        std::string detail = "no hole and no antihole";
        if (!r.weakly_chordal->is_weakly_chordal) {
            detail = r.weakly_chordal->witness_in_complement ? "antihole on" : "hole on";
            for (vertex v : r.weakly_chordal->witness->cycle)
                detail += " " + std::to_string(v);
        }
        r.checks.push_back(outcome("weakly chordal", r.weakly_chordal->is_weakly_chordal, detail));
    } else {
        r.checks.push_back({"weakly chordal", CheckStatus::skipped,
                            std::to_string(g.vertex_count()) + " vertices exceeds the limit of " +
                                std::to_string(options.weakly_chordal_vertex_limit)});
    }
    return r;
}

} // namespace recolour
