#include "recolour/exact.hpp"

#include <algorithm>
#include <string>

#include "recolour/errors.hpp"

namespace recolour {

namespace {

void check_limit(const Graph& g, int vertex_limit, const char* what)
{
    if (g.vertex_count() > vertex_limit)
        throw limit_exceeded(std::string(what) + " limited to " + std::to_string(vertex_limit) +
                             " vertices, graph has " + std::to_string(g.vertex_count()));
}

// Tomita-style search. With target > 0 it stops at the first clique of that
// size; with target == 0 it maximizes.
class CliqueSearch {
public:
    CliqueSearch(const std::vector<VertexSet>& nbr, int target) : nbr_(nbr), target_(target) {}

    std::vector<vertex> run(const VertexSet& candidates)
    {
        if (!candidates.empty())
            expand(candidates);
        return best_;
    }

private:
    void expand(VertexSet cand)
    {
        std::vector<vertex> order;
        std::vector<int> bound;
        VertexSet uncoloured = cand;
        for (int colour = 1; !uncoloured.empty(); ++colour) {
            VertexSet q = uncoloured;
            for (int v = q.next(0); v != -1; v = q.next(v + 1)) {
                q -= nbr_[v];
                uncoloured.erase(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }

        for (std::size_t i = order.size(); i-- > 0;) {
            const int floor = std::max(static_cast<int>(best_.size()), target_ - 1);
            if (static_cast<int>(current_.size()) + bound[i] <= floor)
                return;
            const vertex v = order[i];
            current_.push_back(v);
            const VertexSet next = cand & nbr_[v];
            if (next.empty()) {
                if (current_.size() > best_.size())
                    best_ = current_;
            } else {
                expand(next);
            }
            current_.pop_back();
            cand.erase(v);
            if (target_ > 0 && static_cast<int>(best_.size()) >= target_)
                return;
        }
    }

    const std::vector<VertexSet>& nbr_;
    int target_;
    std::vector<vertex> current_;
    std::vector<vertex> best_;
};

class Dsatur {
public:
    Dsatur(const Graph& g, int k)
        : g_(g), k_(k), colour_(static_cast<std::size_t>(g.vertex_count()), 0),
          seen_(static_cast<std::size_t>(g.vertex_count()) * (k + 1), 0),
          saturation_(static_cast<std::size_t>(g.vertex_count()), 0)
    {
    }

    void assign(vertex v, int c)
    {
        colour_[v] = c;
        for (vertex u : g_.neighbours(v))
            if (seen_[index(u, c)]++ == 0)
                ++saturation_[u];
    }

    void unassign(vertex v)
    {
        const int c = colour_[v];
        colour_[v] = 0;
        for (vertex u : g_.neighbours(v))
            if (--seen_[index(u, c)] == 0)
                --saturation_[u];
    }

    bool solve(int coloured, int max_used)
    {
        const int n = g_.vertex_count();
        if (coloured == n)
            return true;
        vertex pick = -1;
        for (vertex v = 0; v < n; ++v) {
            if (colour_[v])
                continue;
            if (pick == -1 || saturation_[v] > saturation_[pick] ||
                (saturation_[v] == saturation_[pick] && g_.degree(v) > g_.degree(pick)))
                pick = v;
        }
        if (saturation_[pick] >= k_)
            return false;
        const int top = std::min(k_, max_used + 1);
        for (int c = 1; c <= top; ++c) {
            if (seen_[index(pick, c)])
                continue;
            assign(pick, c);
            if (solve(coloured + 1, std::max(max_used, c)))
                return true;
            unassign(pick);
        }
        return false;
    }

    const std::vector<int>& colours() const { return colour_; }

private:
    std::size_t index(vertex v, int c) const
    {
        return static_cast<std::size_t>(v) * (k_ + 1) + c;
    }

    const Graph& g_;
    int k_;
    std::vector<int> colour_;
    std::vector<int> seen_;
    std::vector<int> saturation_;
};

} // namespace

std::vector<vertex> max_clique(const Graph& g, int vertex_limit)
{
    check_limit(g, vertex_limit, "max_clique");
    const int n = g.vertex_count();
    if (n == 0)
        return {};
    const auto nbr = g.neighbour_sets();
    const int omega =
        static_cast<int>(CliqueSearch(nbr, 0).run(VertexSet::full(n)).size());

    // Lexicographically least maximum clique: take each vertex in turn if a
    // completion of the required size still exists among later common neighbours.
    std::vector<vertex> chosen;
    VertexSet cand = VertexSet::full(n);
    for (int v = cand.next(0); v != -1 && static_cast<int>(chosen.size()) < omega;
         v = cand.next(v + 1)) {
        const int need = omega - static_cast<int>(chosen.size()) - 1;
        VertexSet rest = cand & nbr[v];
        for (int u = rest.next(0); u != -1 && u <= v; u = rest.next(u + 1))
            rest.erase(u);
        if (need == 0 || static_cast<int>(CliqueSearch(nbr, need).run(rest).size()) >= need) {
            chosen.push_back(v);
            cand = rest;
        }
    }
    return chosen;
}

ChromaticResult chromatic_number_exact(const Graph& g, int vertex_limit)
{
    check_limit(g, vertex_limit, "chromatic_number_exact");
    const int n = g.vertex_count();
    if (n == 0)
        return {0, Colouring{0, {}}};

    const auto clique = max_clique(g, vertex_limit);
    for (int k = static_cast<int>(clique.size()); k <= n; ++k) {
        Dsatur search(g, k);
        int c = 0;
        for (vertex v : clique)
            search.assign(v, ++c);
        if (search.solve(c, c))
            return {k, Colouring{k, search.colours()}};
    }
    throw error("chromatic_number_exact: no colouring found with n colours");
}

} // namespace recolour
