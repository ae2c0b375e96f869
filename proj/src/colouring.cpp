#include "recolour/colouring.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "recolour/errors.hpp"

namespace recolour {

void check_assignment(const Graph& g, const Colouring& c)
{
    if (static_cast<int>(c.colours.size()) != g.vertex_count())
        throw precondition_error("colouring has " + std::to_string(c.colours.size()) +
                                 " entries for a graph on " +
                                 std::to_string(g.vertex_count()) + " vertices");
    if (c.palette < 0)
        throw precondition_error("negative palette size");
    for (std::size_t v = 0; v < c.colours.size(); ++v)
        if (c.colours[v] < 1 || c.colours[v] > c.palette)
            throw precondition_error("colour " + std::to_string(c.colours[v]) + " of vertex " +
                                     std::to_string(v) + " outside palette 1.." +
                                     std::to_string(c.palette));
}

bool is_proper(const Graph& g, const Colouring& c)
{
    check_assignment(g, c);
    for (const auto& e : g.edges())
        if (c.colours[e.u] == c.colours[e.v])
            return false;
    return true;
}

bool is_frozen(const Graph& g, const Colouring& c)
{
    if (!is_proper(g, c))
        throw precondition_error("is_frozen requires a proper colouring");
    std::vector<char> seen(static_cast<std::size_t>(c.palette) + 1);
    for (vertex v = 0; v < g.vertex_count(); ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        int distinct = 1;
        seen[c.colours[v]] = 1;
        for (vertex u : g.neighbours(v))
            if (!seen[c.colours[u]]) {
                seen[c.colours[u]] = 1;
                ++distinct;
            }
        if (distinct < c.palette)
            return false;
    }
    return true;
}

int colours_used(const Colouring& c)
{
    std::vector<int> sorted = c.colours;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Partition canonical(Partition p)
{
    std::erase_if(p.classes, [](const auto& cls) { return cls.empty(); });
    for (auto& cls : p.classes)
        std::sort(cls.begin(), cls.end());
    std::sort(p.classes.begin(), p.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return p;
}

Partition partition_of(const Colouring& c)
{
    std::map<int, std::vector<vertex>> by_colour;
    for (std::size_t v = 0; v < c.colours.size(); ++v)
        by_colour[c.colours[v]].push_back(static_cast<vertex>(v));
    Partition p;
    for (auto& [colour, members] : by_colour)
        p.classes.push_back(std::move(members));
    return canonical(std::move(p));
}

Colouring colouring_from_partition(const Partition& p, int vertex_count, int palette)
{
    if (static_cast<int>(p.classes.size()) > palette)
        throw precondition_error("partition has more classes than the palette has colours");
    Colouring c{palette, std::vector<int>(static_cast<std::size_t>(vertex_count), 0)};
    for (std::size_t i = 0; i < p.classes.size(); ++i)
        for (vertex v : p.classes[i]) {
            if (v < 0 || v >= vertex_count || c.colours[v] != 0)
                throw precondition_error("partition is not a partition of the vertex set");
            c.colours[v] = static_cast<int>(i) + 1;
        }
    if (std::find(c.colours.begin(), c.colours.end(), 0) != c.colours.end())
        throw precondition_error("partition does not cover the vertex set");
    return c;
}

Colouring swap_colours(Colouring c, int a, int b)
{
    for (auto& col : c.colours) {
        if (col == a)
            col = b;
        else if (col == b)
            col = a;
    }
    return c;
}

} // namespace recolour
