#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "critgraph/constraints.hpp"
#include "critgraph/enumerate.hpp"
#include "critgraph/graph6.hpp"
#include "critgraph/invariants.hpp"
#include "critgraph/report_json.hpp"

namespace py = pybind11;
using namespace critgraph;

namespace {

std::tuple<int, int, int, int> as_tuple(const DegreeTuple& t) { return {t.a, t.b, t.c, t.d}; }

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs)
        edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

std::string report_json(const Graph& g, const std::string& profile, bool strict, const std::string& cut_mode,
                        long long budget, const std::set<std::string>& disabled)
{
    ReportOptions options;
    options.strict = strict;
    if (cut_mode == "exhaustive")
        options.cut_mode = CutMode::exhaustive;
    else if (cut_mode != "witness")
        throw std::invalid_argument("cut_mode must be 'witness' or 'exhaustive'");
    options.cut_budget = budget;
    options.disabled = disabled;
    return to_json(full_report(g, TargetParams::parse(profile), options)).dump();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const Edge& e : g.edges())
                     out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("complement", &Graph::complement)
        .def("__eq__", [](const Graph& x, const Graph& y) { return x == y; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_graph6", [](const std::string& text) { return parse_graph6(text); });
    m.def("to_graph6", &to_graph6);
    m.def("independence_number", &independence_number);
    m.def("clique_number", &clique_number);
    m.def("vertex_connectivity", &vertex_connectivity);
    m.def("edge_connectivity", &edge_connectivity);
    m.def("is_ramsey_graph", [](const Graph& g, int s, int t) { return is_ramsey_graph(g, s, t).ok; });
    m.def("summary_json", [](const Graph& g) { return to_json(summarize(g)).dump(); });
    m.def("report_json", &report_json, py::arg("graph"), py::arg("profile") = "gamma41", py::arg("strict") = false,
          py::arg("cut_mode") = "witness", py::arg("budget") = kDefaultCutBudget,
          py::arg("disabled") = std::set<std::string>{});

    m.def("degseq_solutions", [](int n, int e, int d6) {
        std::vector<std::tuple<int, int, int, int>> out;
        for (const auto& s : degseq_solutions(n, e, d6))
            out.push_back(as_tuple(s.tuple()));
        return out;
    });
    m.def("partition_triples", [] {
        std::vector<std::tuple<int, int, int, int>> out;
        for (const auto& t : partition_triples())
            out.emplace_back(t.h21, t.h22, t.h23, t.boundary_edges);
        return out;
    });
    m.def(
        "diam2_deg6_sequences",
        [](bool strict) {
            std::vector<std::tuple<int, int, int, int>> out;
            for (const auto& t : diam2_deg6_sequences(strict))
                out.push_back(as_tuple(t));
            return out;
        },
        py::arg("strict") = false);
    m.def("audit_json", [] {
        return audit_json(flagged_rows(audit_printed_rows(bundled_transcription()))).dump();
    });
}
