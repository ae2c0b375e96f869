#include "recolour/matching.hpp"

#include <algorithm>
#include <string>

#include "recolour/errors.hpp"
#include "recolour/structure.hpp"

namespace recolour {

bool is_matching(const Graph& g, const Matching& m)
{
    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& e : m.pairs) {
        if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count() || e.v >= g.vertex_count())
            return false;
        if (!g.adjacent(e.u, e.v) || covered[e.u] || covered[e.v])
            return false;
        covered[e.u] = covered[e.v] = 1;
    }
    return true;
}

namespace {

class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.vertex_count()), match_(n_, -1), parent_(n_, -1), base_(n_),
          used_(n_), in_blossom_(n_)
    {
    }

    std::vector<vertex> solve()
    {
        for (vertex root = 0; root < n_; ++root) {
            if (match_[root] != -1)
                continue;
            vertex u = find_augmenting_path(root);
            while (u != -1) {
                const vertex pv = parent_[u];
                const vertex ppv = match_[pv];
                match_[u] = pv;
                match_[pv] = u;
                u = ppv;
            }
        }
        return match_;
    }

private:
    vertex lowest_common_base(vertex a, vertex b)
    {
        std::vector<char> on_path(n_, 0);
        while (true) {
            a = base_[a];
            on_path[a] = 1;
            if (match_[a] == -1)
                break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (on_path[b])
                return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(vertex v, vertex b, vertex child)
    {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    vertex find_augmenting_path(vertex root)
    {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (vertex i = 0; i < n_; ++i)
            base_[i] = i;
        used_[root] = 1;
        std::vector<vertex> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const vertex v = queue[head];
            for (vertex to : g_.neighbours(v)) {
                if (base_[v] == base_[to] || match_[v] == to)
                    continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    const vertex b = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (vertex i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = b;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1)
                        return to;
                    used_[match_[to]] = 1;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::vector<vertex> match_;
    std::vector<vertex> parent_;
    std::vector<vertex> base_;
    std::vector<char> used_;
    std::vector<char> in_blossom_;
};

} // namespace

Matching max_matching(const Graph& g)
{
    const auto mate = Blossom(g).solve();
    Matching m;
    for (vertex u = 0; u < g.vertex_count(); ++u)
        if (mate[u] > u)
            m.pairs.push_back({u, mate[u]});
    return m;
}

Colouring optimal_colouring_3k1(const Graph& g)
{
    const auto verdict = is_3k1_free(g);
    if (!verdict.is_free) {
        const auto& w = *verdict.witness;
        throw precondition_error("graph is not 3K1-free: stable set {" + std::to_string(w[0]) +
                                 ", " + std::to_string(w[1]) + ", " + std::to_string(w[2]) + "}");
    }
    const int n = g.vertex_count();
    const Matching m = max_matching(complement(g));
    Partition p;
    std::vector<char> matched(static_cast<std::size_t>(n), 0);
    for (const auto& e : m.pairs) {
        p.classes.push_back({e.u, e.v});
        matched[e.u] = matched[e.v] = 1;
    }
    for (vertex v = 0; v < n; ++v)
        if (!matched[v])
            p.classes.push_back({v});
    p = canonical(std::move(p));
    return colouring_from_partition(p, n, static_cast<int>(p.classes.size()));
}

} // namespace recolour
