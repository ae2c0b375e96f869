#include "recolour/structure.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "recolour/errors.hpp"

namespace recolour {

bool is_valid_hole(const Graph& g, const HoleCertificate& hole)
{
    const auto& cyc = hole.cycle;
    const std::size_t len = cyc.size();
    if (len < 5)
        return false;
    for (vertex v : cyc)
        if (v < 0 || v >= g.vertex_count())
            return false;
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
            if (cyc[i] == cyc[j])
                return false;
            const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if (g.adjacent(cyc[i], cyc[j]) != consecutive)
                return false;
        }
    return true;
}

namespace {

// Labels the components of the subgraph induced by `region`; -1 outside it.
std::vector<int> label_components(const std::vector<VertexSet>& nbr, const VertexSet& region,
                                  int& component_count)
{
    const int n = region.capacity();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    component_count = 0;
    VertexSet unseen = region;
    std::vector<vertex> stack;
    for (int s = unseen.next(0); s != -1; s = unseen.next(s + 1)) {
        unseen.erase(s);
        label[s] = component_count;
        stack.push_back(s);
        while (!stack.empty()) {
            const vertex u = stack.back();
            stack.pop_back();
            VertexSet fresh = nbr[u] & unseen;
            for (int w = fresh.next(0); w != -1; w = fresh.next(w + 1)) {
                unseen.erase(w);
                label[w] = component_count;
                stack.push_back(w);
            }
        }
        ++component_count;
    }
    return label;
}

VertexSet touched_components(const VertexSet& neighbours, const std::vector<int>& label,
                             int component_count)
{
    VertexSet out(std::max(component_count, 1));
    for (int w = neighbours.next(0); w != -1; w = neighbours.next(w + 1))
        if (label[w] >= 0)
            out.insert(label[w]);
    return out;
}

} // namespace

std::optional<HoleCertificate> find_hole(const Graph& g, int vertex_limit)
{
    const int n = g.vertex_count();
    if (n > vertex_limit)
        throw limit_exceeded("hole search limited to " + std::to_string(vertex_limit) +
                             " vertices, graph has " + std::to_string(n));
    if (n < 5)
        return std::nullopt;

    const auto nbr = g.neighbour_sets();
    std::vector<VertexSet> closed = nbr;
    for (vertex v = 0; v < n; ++v)
        closed[v].insert(v);
    const VertexSet everything = VertexSet::full(n);

    // Best induced P4 (a, b, c, d) found so far, lexicographically.
    std::optional<std::array<vertex, 4>> best;

    for (vertex b = 0; b < n; ++b) {
        for (vertex c : g.neighbours(b)) {
            const VertexSet a_candidates = nbr[b] - closed[c];
            const VertexSet d_candidates = nbr[c] - closed[b];
            if (a_candidates.empty() || d_candidates.empty())
                continue;

            const VertexSet remainder = everything - (closed[b] | closed[c]);
            int component_count = 0;
            const auto label = label_components(nbr, remainder, component_count);
            if (component_count == 0)
                continue;

            std::vector<std::optional<VertexSet>> d_touch(static_cast<std::size_t>(n));
            for (int a = a_candidates.next(0); a != -1; a = a_candidates.next(a + 1)) {
                if (best) {
                    const std::array<vertex, 3> prefix{a, b, c};
                    const std::array<vertex, 3> best_prefix{(*best)[0], (*best)[1], (*best)[2]};
                    if (prefix > best_prefix)
                        break;
                }
                const VertexSet a_touch = touched_components(nbr[a], label, component_count);
                if (a_touch.empty())
                    continue;
                const VertexSet ds = d_candidates - nbr[a];
                bool found = false;
                for (int d = ds.next(0); d != -1; d = ds.next(d + 1)) {
                    auto& dt = d_touch[d];
                    if (!dt)
                        dt = touched_components(nbr[d], label, component_count);
                    if (a_touch.intersects(*dt)) {
                        const std::array<vertex, 4> cand{a, b, c, d};
                        if (!best || cand < *best)
                            best = cand;
                        found = true;
                        break;
                    }
                }
                if (found)
                    break;
            }
        }
    }
    if (!best)
        return std::nullopt;

    // Rebuild the shortest d..a path through the remainder of (b, c).
    const auto [a, b, c, d] = *best;
    const VertexSet remainder = everything - (closed[b] | closed[c]);
    std::vector<vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<vertex> queue{d};
    parent[d] = d;
    for (std::size_t head = 0; head < queue.size() && parent[a] == -1; ++head) {
        const vertex u = queue[head];
        for (vertex w : g.neighbours(u)) {
            if (parent[w] != -1)
                continue;
            if (w == a && u != d) {
                parent[w] = u;
                break;
            }
            if (remainder.contains(w)) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }

    HoleCertificate hole;
    hole.cycle = {a, b, c, d};
    std::vector<vertex> interior;
    for (vertex u = parent[a]; u != d; u = parent[u])
        interior.push_back(u);
    std::reverse(interior.begin(), interior.end());
    hole.cycle.insert(hole.cycle.end(), interior.begin(), interior.end());
    return hole;
}

WeaklyChordalVerdict is_weakly_chordal(const Graph& g, int vertex_limit)
{
    WeaklyChordalVerdict verdict;
    if (auto hole = find_hole(g, vertex_limit)) {
        verdict.is_weakly_chordal = false;
        verdict.witness = std::move(hole);
        return verdict;
    }
    if (auto antihole = find_hole(complement(g), vertex_limit)) {
        verdict.is_weakly_chordal = false;
        verdict.witness = std::move(antihole);
        verdict.witness_in_complement = true;
    }
    return verdict;
}

ThreeK1Verdict is_3k1_free(const Graph& g)
{
    const int n = g.vertex_count();
    const auto nbr = g.neighbour_sets();
    for (vertex i = 0; i < n; ++i) {
        VertexSet after_i = VertexSet::full(n) - nbr[i];
        for (vertex j = after_i.next(i + 1); j != -1; j = after_i.next(j + 1)) {
            const VertexSet common = after_i - nbr[j];
            const int k = common.next(j + 1);
            if (k != -1)
                return {false, std::array<vertex, 3>{i, j, k}};
        }
    }
    return {};
}

} // namespace recolour
