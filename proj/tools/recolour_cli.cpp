// recolour: command-line front end.
//
// Exit codes: 0 success / property holds, 1 property fails or precondition
// violated (JSON diagnostics on stderr), 2 usage or parse error, 3 resource
// limit exceeded.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "recolour/io.hpp"
#include "recolour/recolour.hpp"

namespace {

using namespace recolour;

enum exit_code : int { exit_ok = 0, exit_fail = 1, exit_usage = 2, exit_limit = 3 };

struct RunConfig {
    std::optional<int> limit_vertices;
    std::size_t limit_colourings = ExplorationLimits{}.max_colourings;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out;
    bool progress = false;

    int vertex_limit(int fallback) const { return limit_vertices.value_or(fallback); }
    std::size_t gn_limit() const
    {
        return limit_vertices ? static_cast<std::size_t>(*limit_vertices) : default_gn_vertex_limit;
    }
    ExplorationLimits exploration() const
    {
        ExplorationLimits l;
        l.max_colourings = limit_colourings;
        return l;
    }
};

// What a subcommand produced. `data` is always set; `text` and `dot` are the
// alternative renderings when the command supports them.
struct Output {
    json data;
    std::string text;
    std::optional<Graph> dot_graph;
    std::optional<Colouring> dot_colouring;
    int status = exit_ok;
    json diagnostics; // written to stderr when status != 0
};

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void report_progress(const RunConfig& cfg, const std::string& msg)
{
    if (cfg.progress)
        std::cerr << "[recolour] " << msg << '\n';
}

void check_input_size(const RunConfig& cfg, const Graph& g)
{
    if (cfg.limit_vertices && g.vertex_count() > *cfg.limit_vertices)
        throw limit_exceeded("input has " + std::to_string(g.vertex_count()) +
                             " vertices, limit is " + std::to_string(*cfg.limit_vertices));
}

Graph load_graph(const RunConfig& cfg, const std::string& path)
{
    Graph g = read_graph(path);
    check_input_size(cfg, g);
    return g;
}

Colouring load_colouring(const Graph& g, const std::string& path)
{
    Colouring c = read_colouring(path);
    if (static_cast<int>(c.colours.size()) != g.vertex_count())
        throw parse_error(path + ": colouring has " + std::to_string(c.colours.size()) +
                          " entries, graph has " + std::to_string(g.vertex_count()) + " vertices");
    return c;
}

Partition load_partition(const std::string& path)
{
    const json j = read_json(path);
    if (!j.is_array())
        throw parse_error(path + ": partition must be an array of classes");
    Partition p;
    for (const auto& cls : j) {
        if (!cls.is_array())
            throw parse_error(path + ": every class must be an array of vertices");
        auto& out = p.classes.emplace_back();
        for (const auto& v : cls) {
            if (!v.is_number_integer())
                throw parse_error(path + ": vertices must be integers");
            out.push_back(v.get<int>());
        }
    }
    return p;
}

std::string join(const std::vector<int>& xs, const char* sep = " ")
{
    std::ostringstream s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s << (i ? sep : "") << xs[i];
    return s.str();
}

std::string colouring_text(const Colouring& c)
{
    return "k=" + std::to_string(c.palette) + " colours: " + join(c.colours) + "\n";
}

std::string graph_text(const Graph& g)
{
    std::ostringstream s;
    s << "n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    for (const auto& e : g.edges())
        s << e.u << " " << e.v << "\n";
    return s.str();
}

Output graph_output(const Graph& g, json extra = json::object())
{
    Output o;
    o.data = to_json(g);
    for (auto& [key, value] : extra.items())
        o.data[key] = value;
    o.text = graph_text(g);
    o.dot_graph = g;
    return o;
}

Output colouring_output(const Graph& g, const Colouring& c)
{
    Output o;
    o.data = to_json(c);
    o.text = colouring_text(c);
    o.dot_graph = g;
    o.dot_colouring = c;
    return o;
}

// Marks a predicate result: exit 1 with the report mirrored on stderr.
void property(Output& o, bool holds, const std::string& what)
{
    if (holds)
        return;
    o.status = exit_fail;
    o.diagnostics = {{"error", "property_failed"}, {"property", what}, {"report", o.data}};
}

void emit(const RunConfig& cfg, const Output& o)
{
    std::string body;
    if (cfg.format == "json") {
        body = o.data.dump() + "\n";
    } else if (cfg.format == "text") {
        body = o.text.empty() ? o.data.dump() + "\n" : o.text;
    } else {
        if (!o.dot_graph)
            throw usage_error("--format dot is not available for this command");
        body = to_dot(*o.dot_graph, o.dot_colouring);
    }
    if (cfg.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f)
        throw usage_error("cannot write " + cfg.out);
    f << body;
}

void emit_error(const json& diag) { std::cerr << diag.dump() << '\n'; }

using Handler = std::function<Output()>;

struct Cli {
    CLI::App app{"Graph recolouring reconfiguration toolkit", "recolour"};
    RunConfig cfg;
    std::map<CLI::App*, Handler> handlers;

    CLI::App* command(const std::string& name, const std::string& about, Handler h)
    {
        auto* sub = app.add_subcommand(name, about);
        sub->fallthrough();
        handlers.emplace(sub, std::move(h));
        return sub;
    }
};

void add_graph_arg(CLI::App* sub, std::string& path)
{
    sub->add_option("--graph,graph", path, "graph file (JSON, or DIMACS .col)")->required();
}

void register_family(Cli& cli)
{
    auto& cfg = cli.cfg;
    static int n = 1;
    static int wc_limit = default_weakly_chordal_vertex_limit;

    cli.command("gen-gn", "write the counterexample graph G_n", [&cfg] {
           const auto s = build_gn(n, cfg.gn_limit());
           json hubs = {{"w", s.hubs[hub_w]}, {"x", s.hubs[hub_x]},
                        {"y", s.hubs[hub_y]}, {"z", s.hubs[hub_z]}};
           return graph_output(s.graph, {{"level", n}, {"hubs", hubs}});
       })->add_option("--n", n, "level n >= 1")->required();

    cli.command("colour-gn", "write the optimal (2n+1)-colouring of G_n", [&cfg] {
           return colouring_output(build_gn(n, cfg.gn_limit()).graph, colour_gn(n, cfg.gn_limit()));
       })->add_option("--n", n, "level n >= 1")->required();

    cli.command("frozen-gn", "write the frozen (3n+1)-colouring of G_n", [&cfg] {
           return colouring_output(build_gn(n, cfg.gn_limit()).graph,
                                   frozen_colouring_gn(n, cfg.gn_limit()));
       })->add_option("--n", n, "level n >= 1")->required();

    auto* verify = cli.command("verify-counterexample", "certify G_n is a non-mixing witness", [&cfg] {
        CounterexampleOptions opt;
        opt.gn_vertex_limit = cfg.gn_limit();
        opt.weakly_chordal_vertex_limit = wc_limit;
        report_progress(cfg, "verifying G_" + std::to_string(n));
        const auto r = verify_counterexample(n, opt);
        Output o;
        json checks = json::array();
        std::ostringstream text;
        text << "G_" << r.n << ": " << r.vertex_count << " vertices, " << r.edge_count
             << " edges, k = " << r.k << "\n";
        for (const auto& c : r.checks) {
            checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
            text << "  [" << to_string(c.status) << "] " << c.name;
            if (!c.detail.empty())
                text << " - " << c.detail;
            text << "\n";
        }
        text << (r.passed() ? "PASSED" : "FAILED") << "\n";
        o.data = {{"n", r.n},
                  {"k", r.k},
                  {"vertex_count", r.vertex_count},
                  {"edge_count", r.edge_count},
                  {"checks", checks},
                  {"passed", r.passed()}};
        o.text = text.str();
        property(o, r.passed(), "counterexample");
        return o;
    });
    verify->add_option("--n", n, "level n >= 1")->required();
    verify->add_option("--wc-limit", wc_limit,
                       "largest graph given the weakly chordal check (larger: skipped)");
}

void register_structure(Cli& cli)
{
    auto& cfg = cli.cfg;
    static std::string graph;

    add_graph_arg(cli.command("check-wc", "test for holes and antiholes", [&cfg] {
        const Graph g = load_graph(cfg, graph);
        const auto v = is_weakly_chordal(g, cfg.vertex_limit(default_weakly_chordal_vertex_limit));
        Output o;
        o.data = {{"weakly_chordal", v.is_weakly_chordal}};
        o.text = v.is_weakly_chordal ? "weakly chordal\n" : "not weakly chordal\n";
        if (v.witness) {
            const char* kind = v.witness_in_complement ? "antihole" : "hole";
            o.data["witness"] = {{"kind", kind}, {"cycle", v.witness->cycle}};
            o.text += std::string(kind) + ": " + join(v.witness->cycle) + "\n";
        }
        property(o, v.is_weakly_chordal, "weakly_chordal");
        return o;
    }), graph);

    add_graph_arg(cli.command("is-3k1-free", "test for a stable set of size three", [&cfg] {
        const auto v = is_3k1_free(load_graph(cfg, graph));
        Output o;
        o.data = {{"3k1_free", v.is_free}};
        o.text = v.is_free ? "3K1-free\n" : "not 3K1-free\n";
        if (v.witness) {
            o.data["witness"] = *v.witness;
            o.text += "stable triple: " + join({(*v.witness)[0], (*v.witness)[1], (*v.witness)[2]}) + "\n";
        }
        property(o, v.is_free, "3k1_free");
        return o;
    }), graph);

    add_graph_arg(cli.command("chromatic", "exact chromatic number with a witness colouring", [&cfg] {
        const Graph g = load_graph(cfg, graph);
        const auto r = chromatic_number_exact(g, cfg.vertex_limit(default_exact_vertex_limit));
        Output o = colouring_output(g, r.colouring);
        o.data = {{"chromatic_number", r.chromatic_number}, {"colouring", to_json(r.colouring)}};
        o.text = "chromatic number " + std::to_string(r.chromatic_number) + "\n" +
                 colouring_text(r.colouring);
        return o;
    }), graph);

    add_graph_arg(cli.command("clique", "lexicographically least maximum clique", [&cfg] {
        const auto c = max_clique(load_graph(cfg, graph), cfg.vertex_limit(default_exact_vertex_limit));
        Output o;
        o.data = {{"size", c.size()}, {"clique", c}};
        o.text = "clique of size " + std::to_string(c.size()) + ": " + join(c) + "\n";
        return o;
    }), graph);

    add_graph_arg(cli.command("matching", "maximum matching (blossom algorithm)", [&cfg] {
        const auto m = max_matching(load_graph(cfg, graph));
        Output o;
        json pairs = json::array();
        std::ostringstream text;
        text << "matching of size " << m.size() << "\n";
        for (const auto& e : m.pairs) {
            pairs.push_back({e.u, e.v});
            text << e.u << " " << e.v << "\n";
        }
        o.data = {{"size", m.size()}, {"pairs", pairs}};
        o.text = text.str();
        return o;
    }), graph);
}

void register_recolouring(Cli& cli)
{
    auto& cfg = cli.cfg;
    static std::string graph, from, to, seq;
    static int k = 0;
    static bool count_only = false;

    auto* en = cli.command("enumerate", "list all proper k-colourings", [&cfg] {
        const Graph g = load_graph(cfg, graph);
        report_progress(cfg, "enumerating " + std::to_string(k) + "-colourings");
        const auto all = enumerate_colourings(g, k, cfg.limit_colourings);
        Output o;
        o.data = {{"k", k}, {"count", all.size()}};
        o.text = std::to_string(all.size()) + " proper " + std::to_string(k) + "-colourings\n";
        if (!count_only) {
            json list = json::array();
            for (const auto& c : all) {
                list.push_back(c.colours);
                o.text += join(c.colours) + "\n";
            }
            o.data["colourings"] = list;
        }
        return o;
    });
    add_graph_arg(en, graph);
    en->add_option("--k", k, "palette size")->required();
    en->add_flag("--count-only", count_only, "report only the number of colourings");

    auto* mix = cli.command("mixing", "explore R_k: components, frozen colourings, diameters", [&cfg] {
        const Graph g = load_graph(cfg, graph);
        report_progress(cfg, "building R_" + std::to_string(k));
        const auto s = recolouring_graph(g, k, cfg.exploration());
        report_progress(cfg, std::to_string(s.colouring_count) + " colourings, " +
                                 std::to_string(s.component_count) + " components");
        Output o;
        json diameters = json::array();
        for (const auto& d : s.diameters)
            diameters.push_back(d ? json(*d) : json(nullptr));
        o.data = {{"k", k},
                  {"mixing", s.is_mixing},
                  {"colouring_count", s.colouring_count},
                  {"component_count", s.component_count},
                  {"component_sizes", s.component_sizes},
                  {"frozen_count", s.frozen_count},
                  {"diameters", diameters}};
        if (s.is_mixing && !s.diameters.empty() && s.diameters[0])
            o.data["diameter"] = *s.diameters[0];
        std::ostringstream text;
        text << (s.is_mixing ? "mixing" : "not mixing") << "\n"
             << s.colouring_count << " colourings, " << s.component_count << " components, "
             << s.frozen_count << " frozen\n";
        o.text = text.str();
        property(o, s.is_mixing, "mixing");
        return o;
    });
    add_graph_arg(mix, graph);
    mix->add_option("--k", k, "palette size")->required();

    auto* dist = cli.command("distance", "shortest recolouring distance by BFS", [&cfg] {
        const Graph g = load_graph(cfg, graph);
        const auto d = bfs_distance(g, load_colouring(g, from), load_colouring(g, to),
                                    cfg.exploration());
        Output o;
        o.data = {{"reachable", d.has_value()}, {"distance", d ? json(*d) : json(nullptr)}};
        o.text = d ? "distance " + std::to_string(*d) + "\n" : "unreachable\n";
        property(o, d.has_value(), "reachable");
        return o;
    });
    add_graph_arg(dist, graph);
    dist->add_option("--from", from, "start colouring")->required();
    dist->add_option("--to", to, "target colouring")->required();

    auto* vs = cli.command("verify-sequence", "replay a recolouring sequence", [&cfg] {
        const Graph g = load_graph(cfg, graph);
        const auto s = read_sequence(seq);
        if (static_cast<int>(s.start.colours.size()) != g.vertex_count())
            throw parse_error(seq + ": start colouring does not match the graph");
        Output o;
        const auto r = apply_sequence(g, s);
        o.data = {{"valid", true},
                  {"length", s.steps.size()},
                  {"final", to_json(r.final_colouring)},
                  {"recolour_counts", r.recolour_counts}};
        o.text = "valid sequence of " + std::to_string(s.steps.size()) + " steps\n";
        if (!to.empty()) {
            const bool reached = r.final_colouring == load_colouring(g, to);
            o.data["reaches_target"] = reached;
            o.text += reached ? "reaches target\n" : "does not reach target\n";
            property(o, reached, "reaches_target");
            if (!reached)
                o.diagnostics["step_index"] = s.steps.size(); // first missing step
        }
        return o;
    });
    add_graph_arg(vs, graph);
    vs->add_option("--sequence,--seq", seq, "sequence file")->required();
    vs->add_option("--to", to, "require the sequence to end at this colouring");
}

void register_mixing_3k1(Cli& cli)
{
    auto& cfg = cli.cfg;
    static std::string graph, from, to, target, colouring;

    auto sequence_output = [](const Graph& g, const Colouring& start,
                              const std::vector<RecolouringStep>& steps) {
        const auto r = apply_sequence(g, start, steps);
        Output o;
        o.data = to_json(RecolouringSequence{start, steps});
        o.text = std::to_string(steps.size()) + " steps\n";
        for (const auto& s : steps)
            o.text += std::to_string(s.v) + " -> " + std::to_string(s.to) + "\n";
        o.dot_graph = g;
        o.dot_colouring = r.final_colouring;
        return o;
    };

    auto* path = cli.command("recolour-3k1", "recolouring path of length <= 4|V| on a 3K1-free graph",
                             [&cfg, sequence_output] {
                                 const Graph g = load_graph(cfg, graph);
                                 const auto s = recolour_path_3k1(g, load_colouring(g, from),
                                                                  load_colouring(g, to));
                                 return sequence_output(g, s.start, s.steps);
                             });
    add_graph_arg(path, graph);
    path->add_option("--from", from, "start colouring")->required();
    path->add_option("--to", to, "target colouring")->required();

    auto* ren = cli.command("rename", "recolour between colourings with the same classes",
                            [&cfg, sequence_output] {
                                const Graph g = load_graph(cfg, graph);
                                const auto a = load_colouring(g, from);
                                return sequence_output(g, a, rename_partition(g, a, load_colouring(g, to)));
                            });
    add_graph_arg(ren, graph);
    ren->add_option("--from", from, "start colouring")->required();
    ren->add_option("--to", to, "target colouring")->required();

    auto* norm = cli.command("normalize", "recolour onto a target class partition",
                             [&cfg, sequence_output] {
                                 const Graph g = load_graph(cfg, graph);
                                 const auto a = load_colouring(g, from);
                                 const Partition p = target.empty()
                                                         ? partition_of(optimal_colouring_3k1(g))
                                                         : load_partition(target);
                                 const auto t = normalize_to_partition(g, a, p);
                                 return sequence_output(g, a, t.steps);
                             });
    add_graph_arg(norm, graph);
    norm->add_option("--from", from, "start colouring")->required();
    norm->add_option("--target", target,
                     "partition file [[v,...],...]; default: an optimal colouring's classes");

    auto* rare = cli.command("rare-colour", "find a colour used at most once", [&cfg] {
        const Graph g = load_graph(cfg, graph);
        const auto r = rare_colour(g, load_colouring(g, colouring));
        Output o;
        o.data = {{"colour", r.colour},
                  {"multiplicity", r.multiplicity},
                  {"vertex", r.vertex_id ? json(*r.vertex_id) : json(nullptr)}};
        o.text = "colour " + std::to_string(r.colour) + " used " + std::to_string(r.multiplicity) +
                 " time(s)" + (r.vertex_id ? " at vertex " + std::to_string(*r.vertex_id) : "") + "\n";
        return o;
    });
    add_graph_arg(rare, graph);
    rare->add_option("--colouring,--from", colouring, "proper colouring")->required();
}

void register_generators(Cli& cli)
{
    auto& cfg = cli.cfg;
    static int n = 1;
    static double bias = 0.5, density = 0.5;
    static std::string graph, with, colouring;
    static int at = 0;

    auto* r3 = cli.command("random-3k1", "random 3K1-free graph", [&cfg] {
        if (n < 1)
            throw precondition_error("n must be at least 1");
        return graph_output(random_3k1_free(n, bias, cfg.seed),
                            {{"generator", "random-3k1"}, {"seed", cfg.seed}, {"bias", bias}});
    });
    r3->add_option("--n", n, "vertex count")->required();
    r3->add_option("--bias", bias, "edge insertion probability in the complement")
        ->check(CLI::Range(0.0, 1.0));

    auto* rc = cli.command("random-chordal", "random chordal graph", [&cfg] {
        if (n < 1)
            throw precondition_error("n must be at least 1");
        return graph_output(random_chordal(n, density, cfg.seed),
                            {{"generator", "random-chordal"}, {"seed", cfg.seed}, {"density", density}});
    });
    rc->add_option("--n", n, "vertex count")->required();
    rc->add_option("--density", density, "fraction of each clique kept")->check(CLI::Range(0.0, 1.0));

    auto* sub = cli.command("substitute", "replace a vertex by a graph", [&cfg] {
        const Graph g = load_graph(cfg, graph);
        const Graph h = load_graph(cfg, with);
        return graph_output(substitute(g, at, h));
    });
    add_graph_arg(sub, graph);
    sub->add_option("--vertex", at, "vertex of the host graph")->required();
    sub->add_option("--with", with, "graph substituted for the vertex")->required();

    add_graph_arg(cli.command("complement", "complement graph",
                              [&cfg] { return graph_output(complement(load_graph(cfg, graph))); }),
                  graph);

    auto* dot = cli.command("export-dot", "write DOT, optionally labelled by a colouring", [&cfg] {
        const Graph g = load_graph(cfg, graph);
        Output o = graph_output(g);
        if (!colouring.empty()) {
            o.dot_colouring = load_colouring(g, colouring);
            o.data["colouring"] = to_json(*o.dot_colouring);
        }
        return o;
    });
    add_graph_arg(dot, graph);
    dot->add_option("--colouring", colouring, "colouring used for vertex labels");
}

int run(int argc, char** argv)
{
    Cli cli;
    auto& app = cli.app;
    auto& cfg = cli.cfg;
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--limit-vertices", cfg.limit_vertices, "vertex cap for every operation")
        ->check(CLI::PositiveNumber);
    app.add_option("--limit-colourings", cfg.limit_colourings, "cap on enumerated colourings")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for random generators");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--out,-o", cfg.out, "write output to a file instead of stdout");
    app.add_flag("--progress", cfg.progress, "report progress of long explorations on stderr");

    register_family(cli);
    register_structure(cli);
    register_recolouring(cli);
    register_mixing_3k1(cli);
    register_generators(cli);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    const auto* chosen = app.get_subcommands().front();
    try {
        const Output o = cli.handlers.at(const_cast<CLI::App*>(chosen))();
        emit(cfg, o);
        if (o.status != exit_ok)
            emit_error(o.diagnostics);
        return o.status;
    } catch (const usage_error& e) {
        emit_error({{"error", "usage"}, {"message", e.what()}});
        return exit_usage;
    } catch (const parse_error& e) {
        emit_error({{"error", "parse"}, {"message", e.what()}});
        return exit_usage;
    } catch (const limit_exceeded& e) {
        emit_error({{"error", "limit_exceeded"}, {"message", e.what()}, {"partial_count", e.partial_count()}});
        return exit_limit;
    } catch (const sequence_error& e) {
        emit_error({{"error", "invalid_sequence"}, {"message", e.what()}, {"step_index", e.step_index()}});
        return exit_fail;
    } catch (const precondition_error& e) {
        emit_error({{"error", "precondition"}, {"message", e.what()}});
        return exit_fail;
    } catch (const std::exception& e) {
        emit_error({{"error", "internal"}, {"message", e.what()}});
        return exit_fail;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
