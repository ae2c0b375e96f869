#include "recolour/recolouring.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "recolour/errors.hpp"

namespace recolour {

namespace {

// Place values k^(n-1-v); throws when k^n does not fit in 64 bits.
std::vector<std::uint64_t> place_values(int n, int k)
{
    std::vector<std::uint64_t> place(static_cast<std::size_t>(n), 1);
    std::uint64_t acc = 1;
    for (int v = n - 1; v >= 0; --v) {
        place[v] = acc;
        if (k > 1 && acc > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k))
            throw limit_exceeded("colouring codes need more than 64 bits (" + std::to_string(n) +
                                 " vertices, " + std::to_string(k) + " colours)");
        acc *= static_cast<std::uint64_t>(std::max(k, 1));
    }
    return place;
}

// Backtracking in vertex order, colours ascending; visit(colours) per colouring.
template <class Visit>
void for_each_colouring(const Graph& g, int k, Visit&& visit)
{
    const int n = g.vertex_count();
    std::vector<int> colours(static_cast<std::size_t>(n), 0);
    if (n == 0) {
        visit(colours);
        return;
    }
    int v = 0;
    while (v >= 0) {
        int c = colours[v] + 1;
        for (; c <= k; ++c) {
            bool clash = false;
            for (vertex u : g.neighbours(v))
                if (u < v && colours[u] == c) {
                    clash = true;
                    break;
                }
            if (!clash)
                break;
        }
        if (c > k) {
            colours[v] = 0;
            --v;
            continue;
        }
        colours[v] = c;
        if (v == n - 1)
            visit(colours);
        else
            ++v;
    }
}

void check_k(int k)
{
    if (k < 1)
        throw precondition_error("palette size must be positive, got " + std::to_string(k));
}

std::uint64_t encode_digits(const std::vector<int>& colours, const std::vector<std::uint64_t>& place)
{
    std::uint64_t code = 0;
    for (std::size_t v = 0; v < colours.size(); ++v)
        code += static_cast<std::uint64_t>(colours[v] - 1) * place[v];
    return code;
}

// Calls f(vertex, new_colour) for every proper single-vertex change of colours.
template <class F>
void for_each_move(const Graph& g, int k, const std::vector<int>& colours, F&& f)
{
    std::vector<char> blocked(static_cast<std::size_t>(k) + 1);
    for (vertex v = 0; v < g.vertex_count(); ++v) {
        std::fill(blocked.begin(), blocked.end(), 0);
        blocked[colours[v]] = 1;
        for (vertex u : g.neighbours(v))
            blocked[colours[u]] = 1;
        for (int c = 1; c <= k; ++c)
            if (!blocked[c])
                f(v, c);
    }
}

} // namespace

std::vector<Colouring> enumerate_colourings(const Graph& g, int k, std::size_t limit)
{
    check_k(k);
    std::vector<Colouring> out;
    for_each_colouring(g, k, [&](const std::vector<int>& colours) {
        if (out.size() == limit)
            throw limit_exceeded("more than " + std::to_string(limit) + " colourings", out.size());
        out.push_back(Colouring{k, colours});
    });
    return out;
}

std::uint64_t encode(const Colouring& c)
{
    const auto place = place_values(static_cast<int>(c.colours.size()), c.palette);
    return encode_digits(c.colours, place);
}

Colouring decode(std::uint64_t code, int vertex_count, int k)
{
    Colouring c{k, std::vector<int>(static_cast<std::size_t>(vertex_count))};
    for (int v = vertex_count - 1; v >= 0; --v) {
        c.colours[v] = static_cast<int>(code % static_cast<std::uint64_t>(k)) + 1;
        code /= static_cast<std::uint64_t>(k);
    }
    return c;
}

std::optional<std::size_t> RecolouringGraphSummary::component_of(const Colouring& c) const
{
    if (c.palette != k)
        return std::nullopt;
    for (int col : c.colours)
        if (col < 1 || col > k)
            return std::nullopt;
    const auto code = encode(c);
    auto it = std::lower_bound(codes.begin(), codes.end(), code);
    if (it == codes.end() || *it != code)
        return std::nullopt;
    return component[static_cast<std::size_t>(it - codes.begin())];
}

RecolouringGraphSummary recolouring_graph(const Graph& g, int k, const ExplorationLimits& limits)
{
    check_k(k);
    const int n = g.vertex_count();
    const auto place = place_values(n, k);

    RecolouringGraphSummary s;
    s.k = k;
    for_each_colouring(g, k, [&](const std::vector<int>& colours) {
        if (s.codes.size() == limits.max_colourings)
            throw limit_exceeded("more than " + std::to_string(limits.max_colourings) +
                                     " colourings",
                                 s.codes.size());
        s.codes.push_back(encode_digits(colours, place));
    });
    const std::size_t count = s.codes.size();
    s.colouring_count = count;

    // Adjacency of R_k(g) in compressed rows, indices into codes.
    std::vector<std::size_t> offset(count + 1, 0);
    std::vector<std::uint32_t> target;
    for (std::size_t i = 0; i < count; ++i) {
        const Colouring c = decode(s.codes[i], n, k);
        for_each_move(g, k, c.colours, [&](vertex v, int to) {
            const std::uint64_t next = s.codes[i] + static_cast<std::uint64_t>(to) * place[v] -
                                       static_cast<std::uint64_t>(c.colours[v]) * place[v];
            const auto it = std::lower_bound(s.codes.begin(), s.codes.end(), next);
            target.push_back(static_cast<std::uint32_t>(it - s.codes.begin()));
        });
        offset[i + 1] = target.size();
        if (offset[i + 1] == offset[i])
            ++s.frozen_count;
    }

    constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();
    s.component.assign(count, unassigned);
    std::vector<std::uint32_t> queue;
    std::vector<std::vector<std::uint32_t>> members;
    for (std::size_t start = 0; start < count; ++start) {
        if (s.component[start] != unassigned)
            continue;
        const auto id = static_cast<std::uint32_t>(s.component_sizes.size());
        queue.assign(1, static_cast<std::uint32_t>(start));
        s.component[start] = id;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (std::size_t e = offset[queue[head]]; e < offset[queue[head] + 1]; ++e)
                if (s.component[target[e]] == unassigned) {
                    s.component[target[e]] = id;
                    queue.push_back(target[e]);
                }
        s.component_sizes.push_back(queue.size());
        members.push_back(queue.size() <= limits.max_diameter_states ? queue
                                                                     : std::vector<std::uint32_t>{});
    }
    s.component_count = s.component_sizes.size();
    s.is_mixing = s.component_count <= 1;

    std::vector<int> dist(count, -1);
    for (std::size_t id = 0; id < s.component_count; ++id) {
        if (s.component_sizes[id] > limits.max_diameter_states) {
            s.diameters.push_back(std::nullopt);
            continue;
        }
        int diameter = 0;
        for (std::uint32_t source : members[id]) {
            queue.assign(1, source);
            dist[source] = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const auto u = queue[head];
                for (std::size_t e = offset[u]; e < offset[u + 1]; ++e)
                    if (dist[target[e]] < 0) {
                        dist[target[e]] = dist[u] + 1;
                        queue.push_back(target[e]);
                    }
            }
            diameter = std::max(diameter, dist[queue.back()]);
            for (auto u : queue)
                dist[u] = -1;
        }
        s.diameters.push_back(diameter);
    }
    return s;
}

std::vector<RecolouringStep> available_steps(const Graph& g, const Colouring& c)
{
    if (!is_proper(g, c))
        throw precondition_error("available_steps requires a proper colouring");
    std::vector<RecolouringStep> out;
    for_each_move(g, c.palette, c.colours, [&](vertex v, int to) { out.push_back({v, to}); });
    return out;
}

std::optional<int> bfs_distance(const Graph& g, const Colouring& a, const Colouring& b,
                                const ExplorationLimits& limits)
{
    if (a.palette != b.palette)
        throw precondition_error("colourings have different palettes");
    check_k(a.palette);
    if (!is_proper(g, a) || !is_proper(g, b))
        throw precondition_error("bfs_distance requires proper colourings");
    if (a == b)
        return 0;

    const int n = g.vertex_count();
    const int k = a.palette;
    const auto place = place_values(n, k);

    // Bidirectional BFS: expand whole levels of the smaller frontier; the best
    // meeting point found while finishing a level is a shortest path.
    struct Side {
        std::unordered_map<std::uint64_t, int> dist;
        std::vector<std::uint64_t> frontier;
        int depth = 0;
    };
    Side from, to;
    from.frontier = {encode_digits(a.colours, place)};
    to.frontier = {encode_digits(b.colours, place)};
    from.dist.emplace(from.frontier.front(), 0);
    to.dist.emplace(to.frontier.front(), 0);

    while (!from.frontier.empty() && !to.frontier.empty()) {
        Side& grow = from.frontier.size() <= to.frontier.size() ? from : to;
        const Side& other = &grow == &from ? to : from;
        std::vector<std::uint64_t> next_frontier;
        std::optional<int> best;
        for (const std::uint64_t code : grow.frontier) {
            const Colouring c = decode(code, n, k);
            for_each_move(g, k, c.colours, [&](vertex v, int colour) {
                const std::uint64_t next = code + static_cast<std::uint64_t>(colour) * place[v] -
                                           static_cast<std::uint64_t>(c.colours[v]) * place[v];
                if (!grow.dist.emplace(next, grow.depth + 1).second)
                    return;
                next_frontier.push_back(next);
                if (auto hit = other.dist.find(next); hit != other.dist.end()) {
                    const int total = grow.depth + 1 + hit->second;
                    if (!best || total < *best)
                        best = total;
                }
            });
        }
        if (best)
            return best;
        grow.frontier = std::move(next_frontier);
        ++grow.depth;
        if (from.dist.size() + to.dist.size() > limits.max_colourings)
            throw limit_exceeded("BFS visited more than " + std::to_string(limits.max_colourings) +
                                     " colourings",
                                 from.dist.size() + to.dist.size());
    }
    return std::nullopt;
}

SequenceResult apply_sequence(const Graph& g, const Colouring& start,
                              const std::vector<RecolouringStep>& steps)
{
    if (!is_proper(g, start))
        throw precondition_error("start colouring is not proper");
    SequenceResult r{start, std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0)};
    auto& cur = r.final_colouring.colours;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto [v, to] = steps[i];
        const std::string where = "step " + std::to_string(i) + ": ";
        if (v < 0 || v >= g.vertex_count())
            throw sequence_error(where + "vertex " + std::to_string(v) + " out of range", i);
        if (to < 1 || to > start.palette)
            throw sequence_error(where + "colour " + std::to_string(to) + " outside palette", i);
        if (cur[v] == to)
            throw sequence_error(where + "vertex " + std::to_string(v) + " already has colour " +
                                     std::to_string(to),
                                 i);
        for (vertex u : g.neighbours(v))
            if (cur[u] == to)
                throw sequence_error(where + "recolouring vertex " + std::to_string(v) + " to " +
                                         std::to_string(to) + " clashes with neighbour " +
                                         std::to_string(u),
                                     i);
        cur[v] = to;
        ++r.recolour_counts[v];
    }
    return r;
}

} // namespace recolour
