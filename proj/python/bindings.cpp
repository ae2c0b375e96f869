#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "recolour/io.hpp"
#include "recolour/recolour.hpp"

namespace py = pybind11;
using namespace recolour;

namespace {

std::vector<Edge> to_edges(const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [u, v] : pairs)
        out.push_back({u, v});
    return out;
}

std::vector<std::pair<int, int>> from_edges(const std::vector<Edge>& edges)
{
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const auto& e : edges)
        out.emplace_back(e.u, e.v);
    return out;
}

using StepList = std::vector<std::pair<int, int>>;

StepList from_steps(const std::vector<RecolouringStep>& steps)
{
    StepList out;
    for (const auto& s : steps)
        out.emplace_back(s.v, s.to);
    return out;
}

std::vector<RecolouringStep> to_steps(const StepList& steps)
{
    std::vector<RecolouringStep> out;
    for (auto [v, to] : steps)
        out.push_back({v, to});
    return out;
}

py::dict summary_dict(const RecolouringGraphSummary& s)
{
    py::dict d;
    d["k"] = s.k;
    d["colouring_count"] = s.colouring_count;
    d["component_count"] = s.component_count;
    d["component_sizes"] = s.component_sizes;
    d["frozen_count"] = s.frozen_count;
    d["diameters"] = s.diameters;
    d["mixing"] = s.is_mixing;
    return d;
}

py::dict report_dict(const CounterexampleReport& r)
{
    py::list checks;
    for (const auto& c : r.checks) {
        py::dict d;
        d["name"] = c.name;
        d["status"] = to_string(c.status);
        d["detail"] = c.detail;
        checks.append(d);
    }
    py::dict d;
    d["n"] = r.n;
    d["k"] = r.k;
    d["vertex_count"] = r.vertex_count;
    d["edge_count"] = r.edge_count;
    d["checks"] = checks;
    d["passed"] = r.passed();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Graph recolouring reconfiguration: counterexample family, recolouring graphs, "
              "and recolouring paths on 3K1-free graphs";

    auto base = py::register_exception<error>(m, "RecolourError", PyExc_RuntimeError);
    auto precondition = py::register_exception<precondition_error>(m, "PreconditionError", base.ptr());
    py::register_exception<limit_exceeded>(m, "LimitExceeded", base.ptr());
    py::register_exception<parse_error>(m, "ParseError", base.ptr());
    py::register_exception<sequence_error>(m, "SequenceError", precondition.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 if (n < 0)
                     throw precondition_error("vertex count must be non-negative");
                 return Graph(n, to_edges(edges));
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", [](const Graph& g) { return from_edges(g.edges()); })
        .def("neighbours",
             [](const Graph& g, vertex v) {
                 if (v < 0 || v >= g.vertex_count())
                     throw py::index_error("vertex out of range");
                 const auto nb = g.neighbours(v);
                 return std::vector<vertex>(nb.begin(), nb.end());
             })
        .def("adjacent", &Graph::adjacent)
        .def("add_edge", &Graph::add_edge)
        .def("to_json", [](const Graph& g) { return to_json(g).dump(); })
        .def_static("from_json", [](const std::string& s) {
            try {
                return graph_from_json(json::parse(s));
            } catch (const json::exception& e) {
                throw parse_error(e.what());
            }
        })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__len__", &Graph::vertex_count)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<Colouring>(m, "Colouring")
        .def(py::init([](int k, std::vector<int> colours) { return Colouring{k, std::move(colours)}; }),
             py::arg("k"), py::arg("colours"))
        .def_readwrite("k", &Colouring::palette)
        .def_readwrite("colours", &Colouring::colours)
        .def("__eq__", [](const Colouring& a, const Colouring& b) { return a == b; })
        .def("__repr__", [](const Colouring& c) { return "Colouring(" + to_json(c).dump() + ")"; });

    // graphs
    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("petersen_graph", &petersen_graph);
    m.def("complement", &complement);
    m.def("substitute", &substitute, py::arg("g"), py::arg("v"), py::arg("h"));
    m.def("to_dot", [](const Graph& g, std::optional<Colouring> c) { return to_dot(g, c); },
          py::arg("g"), py::arg("colouring") = std::nullopt);

    // counterexample family
    m.def("build_g1", [] { return build_g1().graph; });
    m.def("build_gn", [](int n) { return build_gn(n).graph; }, py::arg("n"));
    m.def("gn_vertex_count", &gn_vertex_count);
    m.def("g1_colouring", &g1_colouring);
    m.def("g1_frozen_colouring", &g1_frozen_colouring);
    m.def("colour_gn", [](int n) { return colour_gn(n); }, py::arg("n"));
    m.def("clique_gn", [](int n) { return clique_gn(n); }, py::arg("n"));
    m.def("frozen_colouring_gn", [](int n) { return frozen_colouring_gn(n); }, py::arg("n"));
    m.def("verify_counterexample",
          [](int n, int wc_limit) {
              CounterexampleOptions opt;
              opt.weakly_chordal_vertex_limit = wc_limit;
              return report_dict(verify_counterexample(n, opt));
          },
          py::arg("n"), py::arg("weakly_chordal_vertex_limit") = default_weakly_chordal_vertex_limit);

    // structure and exact search
    m.def("is_weakly_chordal",
          [](const Graph& g, int limit) {
              const auto v = is_weakly_chordal(g, limit);
              std::optional<std::vector<vertex>> cycle;
              if (v.witness)
                  cycle = v.witness->cycle;
              return py::make_tuple(v.is_weakly_chordal, cycle, v.witness_in_complement);
          },
          py::arg("g"), py::arg("vertex_limit") = default_weakly_chordal_vertex_limit,
          "Returns (weakly_chordal, witness_cycle_or_None, witness_in_complement).");
    m.def("is_3k1_free", [](const Graph& g) {
        const auto v = is_3k1_free(g);
        return py::make_tuple(v.is_free, v.witness);
    });
    m.def("max_clique", [](const Graph& g) { return max_clique(g); });
    m.def("chromatic_number", [](const Graph& g) {
        const auto r = chromatic_number_exact(g);
        return py::make_tuple(r.chromatic_number, r.colouring);
    });
    m.def("max_matching", [](const Graph& g) { return from_edges(max_matching(g).pairs); });
    m.def("optimal_colouring_3k1", &optimal_colouring_3k1);

    // recolouring graphs
    m.def("is_proper", &is_proper);
    m.def("is_frozen", &is_frozen);
    m.def("enumerate_colourings", &enumerate_colourings, py::arg("g"), py::arg("k"),
          py::arg("limit") = ExplorationLimits{}.max_colourings);
    m.def("recolouring_graph",
          [](const Graph& g, int k, std::size_t limit) {
              ExplorationLimits l;
              l.max_colourings = limit;
              return summary_dict(recolouring_graph(g, k, l));
          },
          py::arg("g"), py::arg("k"), py::arg("limit") = ExplorationLimits{}.max_colourings);
    m.def("bfs_distance",
          [](const Graph& g, const Colouring& a, const Colouring& b) { return bfs_distance(g, a, b); });
    m.def("apply_sequence", [](const Graph& g, const Colouring& start, const StepList& steps) {
        const auto r = apply_sequence(g, start, to_steps(steps));
        return py::make_tuple(r.final_colouring, r.recolour_counts);
    });

    // 3K1-free recolouring
    m.def("rare_colour", [](const Graph& g, const Colouring& c) {
        const auto r = rare_colour(g, c);
        return py::make_tuple(r.colour, r.multiplicity, r.vertex_id);
    });
    m.def("normalize_to_partition",
          [](const Graph& g, const Colouring& start, const std::vector<std::vector<vertex>>& classes) {
              return from_steps(normalize_to_partition(g, start, Partition{classes}).steps);
          });
    m.def("rename_partition", [](const Graph& g, const Colouring& a, const Colouring& b) {
        return from_steps(rename_partition(g, a, b));
    });
    m.def("recolour_path_3k1", [](const Graph& g, const Colouring& a, const Colouring& b) {
        return from_steps(recolour_path_3k1(g, a, b).steps);
    });

    // generators
    m.def("random_3k1_free", &random_3k1_free, py::arg("n"), py::arg("edge_bias"), py::arg("seed"));
    m.def("random_chordal", &random_chordal, py::arg("n"), py::arg("density"), py::arg("seed"));
}
