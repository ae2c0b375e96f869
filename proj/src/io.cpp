#include "recolour/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "recolour/errors.hpp"

namespace recolour {

json to_json(const Graph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

json to_json(const Colouring& c) { return {{"k", c.palette}, {"colours", c.colours}}; }

json to_json(const RecolouringStep& s) { return {{"v", s.v}, {"to", s.to}}; }

json to_json(const RecolouringSequence& seq)
{
    json steps = json::array();
    for (const auto& s : seq.steps)
        steps.push_back(to_json(s));
    return {{"start", to_json(seq.start)}, {"steps", std::move(steps)}};
}

json to_json(const Partition& p) { return json(p.classes); }

json to_json(const HoleCertificate& h) { return json(h.cycle); }

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw parse_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const json& j, const std::string& what)
{
    if (!j.is_number_integer())
        throw parse_error(what + " must be an integer");
    return j.get<int>();
}

} // namespace

Graph graph_from_json(const json& j)
{
    const int n = as_int(field(j, "n"), "\"n\"");
    if (n < 0)
        throw parse_error("\"n\" must be non-negative");
    const json& edges = field(j, "edges");
    if (!edges.is_array())
        throw parse_error("\"edges\" must be an array");
    std::vector<Edge> list;
    std::set<Edge> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const json& e = edges[i];
        const std::string where = "edge " + std::to_string(i);
        if (!e.is_array() || e.size() != 2)
            throw parse_error(where + " must be a pair [u, v]");
        const int u = as_int(e[0], where);
        const int v = as_int(e[1], where);
        if (u == v)
            throw parse_error(where + " is a self-loop at " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error(where + " has an endpoint outside [0, " + std::to_string(n) + ")");
        if (u > v)
            throw parse_error(where + " must be written with u < v");
        if (!seen.insert({u, v}).second)
            throw parse_error(where + " duplicates [" + std::to_string(u) + ", " +
                              std::to_string(v) + "]");
        list.push_back({u, v});
    }
    return Graph(n, list);
}

Colouring colouring_from_json(const json& j)
{
    Colouring c;
    c.palette = as_int(field(j, "k"), "\"k\"");
    if (c.palette < 0)
        throw parse_error("\"k\" must be non-negative");
    const json& colours = field(j, "colours");
    if (!colours.is_array())
        throw parse_error("\"colours\" must be an array");
    for (std::size_t v = 0; v < colours.size(); ++v) {
        const int col = as_int(colours[v], "colour of vertex " + std::to_string(v));
        if (col < 1 || col > c.palette)
            throw parse_error("colour " + std::to_string(col) + " of vertex " + std::to_string(v) +
                              " outside 1.." + std::to_string(c.palette));
        c.colours.push_back(col);
    }
    return c;
}

RecolouringSequence sequence_from_json(const json& j)
{
    RecolouringSequence seq;
    seq.start = colouring_from_json(field(j, "start"));
    const json& steps = field(j, "steps");
    if (!steps.is_array())
        throw parse_error("\"steps\" must be an array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string where = "step " + std::to_string(i);
        seq.steps.push_back({as_int(field(steps[i], "v"), where + " \"v\""),
                             as_int(field(steps[i], "to"), where + " \"to\"")});
    }
    return seq;
}

Graph parse_dimacs(std::istream& in)
{
    std::string line;
    std::optional<int> n;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c")
            continue;
        const std::string where = "line " + std::to_string(line_no);
        if (tag == "p") {
            std::string format;
            long long vertices = 0, count = 0;
            if (!(ls >> format >> vertices >> count) || vertices < 0)
                throw parse_error(where + ": expected \"p edge <n> <m>\"");
            if (n)
                throw parse_error(where + ": second problem line");
            n = static_cast<int>(vertices);
        } else if (tag == "e") {
            if (!n)
                throw parse_error(where + ": edge before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v))
                throw parse_error(where + ": expected \"e <u> <v>\"");
            if (u < 1 || v < 1 || u > *n || v > *n)
                throw parse_error(where + ": vertex outside 1.." + std::to_string(*n));
            if (u == v)
                throw parse_error(where + ": self-loop");
            edges.push_back({static_cast<vertex>(u - 1), static_cast<vertex>(v - 1)});
        } else {
            throw parse_error(where + ": unknown line type \"" + tag + "\"");
        }
    }
    if (!n)
        throw parse_error("missing problem line");
    // DIMACS files commonly list both orientations; Graph merges them
    return Graph(*n, edges);
}

json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
}

Graph read_graph(const std::filesystem::path& path)
{
    const auto ext = path.extension().string();
    if (ext == ".col" || ext == ".dimacs") {
        std::ifstream in(path);
        if (!in)
            throw parse_error("cannot open " + path.string());
        return parse_dimacs(in);
    }
    return graph_from_json(read_json(path));
}

Colouring read_colouring(const std::filesystem::path& path)
{
    return colouring_from_json(read_json(path));
}

RecolouringSequence read_sequence(const std::filesystem::path& path)
{
    return sequence_from_json(read_json(path));
}

void write_dot(std::ostream& out, const Graph& g, const std::optional<Colouring>& colouring)
{
    out << "graph G {\n";
    for (vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (colouring && v < static_cast<vertex>(colouring->colours.size()))
            out << " [label=\"" << v << ":" << colouring->colours[v] << "\"]";
        out << ";\n";
    }
    for (const auto& e : g.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
}

std::string to_dot(const Graph& g, const std::optional<Colouring>& colouring)
{
    std::ostringstream out;
    write_dot(out, g, colouring);
    return out.str();
}

} // namespace recolour
