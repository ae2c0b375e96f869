#include "recolour/mixing_3k1.hpp"

#include <algorithm>
#include <string>

#include "recolour/errors.hpp"
#include "recolour/matching.hpp"
#include "recolour/recolouring.hpp"
#include "recolour/structure.hpp"

namespace recolour {

namespace {

void require_3k1_free(const Graph& g)
{
    const auto verdict = is_3k1_free(g);
    if (!verdict.is_free) {
        const auto& w = *verdict.witness;
        throw precondition_error("graph is not 3K1-free: stable set {" + std::to_string(w[0]) +
                                 ", " + std::to_string(w[1]) + ", " + std::to_string(w[2]) + "}");
    }
}

void require_proper(const Graph& g, const Colouring& c, const char* name)
{
    if (!is_proper(g, c))
        throw precondition_error(std::string(name) + " colouring is not proper");
}

// Least unused palette colour among `active`, else least colour used once.
std::optional<RareColourVerdict> find_rare(const std::vector<int>& colours,
                                           const std::vector<char>& vertex_active,
                                           const std::vector<char>& colour_active)
{
    std::vector<int> count(colour_active.size(), 0);
    std::vector<vertex> holder(colour_active.size(), -1);
    for (std::size_t v = 0; v < colours.size(); ++v)
        if (vertex_active[v]) {
            ++count[colours[v]];
            holder[colours[v]] = static_cast<vertex>(v);
        }
    for (std::size_t c = 1; c < colour_active.size(); ++c)
        if (colour_active[c] && count[c] == 0)
            return RareColourVerdict{static_cast<int>(c), 0, std::nullopt};
    for (std::size_t c = 1; c < colour_active.size(); ++c)
        if (colour_active[c] && count[c] == 1)
            return RareColourVerdict{static_cast<int>(c), 1, holder[c]};
    return std::nullopt;
}

} // namespace

RareColourVerdict rare_colour(const Graph& g, const Colouring& c)
{
    require_3k1_free(g);
    require_proper(g, c, "input");
    const std::vector<char> all_vertices(c.colours.size(), 1);
    std::vector<char> all_colours(static_cast<std::size_t>(c.palette) + 1, 1);
    all_colours[0] = 0;
    auto verdict = find_rare(c.colours, all_vertices, all_colours);
    if (!verdict)
        throw precondition_error("every colour is used at least twice; the palette must exceed "
                                 "the chromatic number");
    return *verdict;
}

NormalizationTrace normalize_to_partition(const Graph& g, const Colouring& start,
                                          const Partition& target)
{
    require_3k1_free(g);
    require_proper(g, start, "start");
    const int n = g.vertex_count();

    std::vector<vertex> partner(static_cast<std::size_t>(n), -1);
    std::vector<int> class_size(static_cast<std::size_t>(n), 0);
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (const auto& cls : target.classes) {
        if (cls.empty() || cls.size() > 2)
            throw precondition_error("target classes must have one or two vertices");
        for (vertex v : cls) {
            if (v < 0 || v >= n || covered[v])
                throw precondition_error("target is not a partition of the vertex set");
            covered[v] = 1;
            class_size[v] = static_cast<int>(cls.size());
        }
        if (cls.size() == 2) {
            if (g.adjacent(cls[0], cls[1]))
                throw precondition_error("target class {" + std::to_string(cls[0]) + ", " +
                                         std::to_string(cls[1]) + "} is not stable");
            partner[cls[0]] = cls[1];
            partner[cls[1]] = cls[0];
        }
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end())
        throw precondition_error("target does not cover the vertex set");
    if (start.palette < static_cast<int>(target.classes.size()) + 1)
        throw precondition_error("palette of " + std::to_string(start.palette) +
                                 " colours needs to exceed the " +
                                 std::to_string(target.classes.size()) + " target classes");

    NormalizationTrace trace;
    trace.result = start;
    trace.recolour_counts.assign(static_cast<std::size_t>(n), 0);
    auto& cur = trace.result.colours;
    std::vector<char> active(static_cast<std::size_t>(n), 1);
    std::vector<char> palette(static_cast<std::size_t>(start.palette) + 1, 1);
    palette[0] = 0;

    auto recolour = [&](vertex v, int c) {
        cur[v] = c;
        ++trace.recolour_counts[v];
        trace.steps.push_back({v, c});
    };

    while (true) {
        std::vector<int> count(palette.size(), 0);
        for (vertex v = 0; v < n; ++v)
            if (active[v])
                ++count[cur[v]];
        // least member of the least current class on H that is not a target class
        vertex stray = -1;
        for (vertex v = 0; v < n && stray == -1; ++v) {
            if (!active[v])
                continue;
            const bool matches = count[cur[v]] == class_size[v] &&
                                 (partner[v] == -1 || cur[partner[v]] == cur[v]);
            if (!matches)
                stray = v;
        }
        if (stray == -1)
            break;

        const auto rare = find_rare(cur, active, palette);
        if (!rare)
            throw precondition_error("no rare colour on the remaining subgraph");
        const int c = rare->colour;
        vertex u;
        if (rare->multiplicity == 1) {
            u = *rare->vertex_id;
        } else {
            u = stray;
            recolour(u, c);
        }
        if (partner[u] != -1)
            recolour(partner[u], c);

        active[u] = 0;
        if (partner[u] != -1)
            active[partner[u]] = 0;
        palette[c] = 0;
    }

    if (partition_of(trace.result) != canonical(target))
        throw error("normalize_to_partition: final partition differs from the target");
    return trace;
}

std::vector<RecolouringStep> rename_partition(const Graph& g, const Colouring& from,
                                              const Colouring& to)
{
    require_proper(g, from, "source");
    require_proper(g, to, "target");
    if (from.palette != to.palette)
        throw precondition_error("colourings have different palettes");
    const Partition p = partition_of(from);
    if (p != partition_of(to))
        throw precondition_error("colourings induce different partitions");
    if (static_cast<int>(p.classes.size()) >= from.palette)
        throw precondition_error("renaming needs a spare colour: " +
                                 std::to_string(p.classes.size()) + " classes, palette of " +
                                 std::to_string(from.palette));

    const std::size_t m = p.classes.size();
    std::vector<int> current(m), wanted(m);
    std::vector<char> used(static_cast<std::size_t>(from.palette) + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
        current[i] = from.colours[p.classes[i].front()];
        wanted[i] = to.colours[p.classes[i].front()];
        used[current[i]] = 1;
    }

    std::vector<RecolouringStep> steps;
    auto move_class = [&](std::size_t i, int c) {
        for (vertex v : p.classes[i])
            steps.push_back({v, c});
        used[current[i]] = 0;
        used[c] = 1;
        current[i] = c;
    };

    while (true) {
        std::optional<std::size_t> first_mismatch;
        std::optional<std::size_t> direct;
        for (std::size_t i = 0; i < m; ++i) {
            if (current[i] == wanted[i])
                continue;
            if (!first_mismatch)
                first_mismatch = i;
            if (!used[wanted[i]]) {
                direct = i;
                break;
            }
        }
        if (!first_mismatch)
            break;
        if (direct) {
            move_class(*direct, wanted[*direct]);
            continue;
        }
        // every mismatched class waits on another: park the first on a spare colour
        const auto spare = static_cast<int>(std::find(used.begin() + 1, used.end(), 0) - used.begin());
        if (spare > from.palette)
            throw precondition_error("palette exhausted while renaming");
        move_class(*first_mismatch, spare);
    }
    return steps;
}

RecolouringSequence recolour_path_3k1(const Graph& g, const Colouring& alpha,
                                      const Colouring& beta)
{
    auto staged = [](const char* stage, auto&& fn) {
        try {
            return fn();
        } catch (const limit_exceeded&) {
            throw;
        } catch (const precondition_error& e) {
            throw precondition_error(std::string(stage) + ": " + e.what());
        }
    };

    const Colouring gamma = staged("input", [&] {
        require_3k1_free(g);
        require_proper(g, alpha, "alpha");
        require_proper(g, beta, "beta");
        if (alpha.palette != beta.palette)
            throw precondition_error("alpha and beta have different palettes");
        Colouring optimal = optimal_colouring_3k1(g);
        if (alpha.palette < optimal.palette + 1)
            throw precondition_error("palette of " + std::to_string(alpha.palette) +
                                     " colours is not above the chromatic number " +
                                     std::to_string(optimal.palette));
        return optimal;
    });
    const Partition classes = partition_of(gamma);

    const auto trace_alpha =
        staged("normalize-alpha", [&] { return normalize_to_partition(g, alpha, classes); });
    const auto trace_beta =
        staged("normalize-beta", [&] { return normalize_to_partition(g, beta, classes); });
    const auto middle =
        staged("rename", [&] { return rename_partition(g, trace_alpha.result, trace_beta.result); });

    RecolouringSequence seq{alpha, trace_alpha.steps};
    seq.steps.insert(seq.steps.end(), middle.begin(), middle.end());

    // Undo beta's normalization: each step goes back to the colour it replaced.
    std::vector<int> replay = beta.colours;
    std::vector<RecolouringStep> undo;
    for (const auto& step : trace_beta.steps) {
        undo.push_back({step.v, replay[step.v]});
        replay[step.v] = step.to;
    }
    seq.steps.insert(seq.steps.end(), undo.rbegin(), undo.rend());

    const auto check = apply_sequence(g, seq);
    if (check.final_colouring != beta)
        throw error("recolour_path_3k1: walk does not end at beta");
    return seq;
}

} // namespace recolour
