#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "indmatch/baseline.hpp"
#include "indmatch/bounds.hpp"
#include "indmatch/constructive.hpp"
#include "indmatch/edge_list.hpp"
#include "indmatch/exact.hpp"
#include "indmatch/generators.hpp"
#include "indmatch/matching.hpp"
#include "indmatch/report.hpp"
#include "indmatch/scan.hpp"

#include <nlohmann/json.hpp>

namespace py = pybind11;
using namespace indmatch;

namespace {

using PyEdge = std::pair<int, int>;
using PyEdges = std::vector<PyEdge>;

EdgeList to_edges(const PyEdges& pairs) {
    EdgeList edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        edges.push_back(Edge{u, v});
    }
    return edges;
}

PyEdges from_edges(const EdgeList& edges) {
    PyEdges pairs;
    pairs.reserve(edges.size());
    for (const Edge& e : edges) {
        pairs.emplace_back(e.u, e.v);
    }
    return pairs;
}

GreedyPolicy parse_policy(const std::string& name) {
    if (name == "first-edge") {
        return GreedyPolicy::FirstEdge;
    }
    if (name == "min-conflict") {
        return GreedyPolicy::MinConflict;
    }
    throw std::invalid_argument("policy must be 'first-edge' or 'min-conflict'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Induced matching toolkit: exact oracle, certified constructive "
              "algorithm, greedy baseline, generators, bounds, and scanners";
    m.attr("__version__") = kToolkitVersion;
    m.attr("DEFAULT_NODE_BUDGET") = kDefaultNodeBudget;

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init([](int n, const PyEdges& edges) {
                 return Graph(n, to_edges(edges));
             }),
             py::arg("n"), py::arg("edges") = PyEdges{})
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def_property_readonly("max_degree", &Graph::max_degree)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors",
             [](const Graph& g, VertexId v) {
                 auto span = g.neighbors(v);
                 return std::vector<VertexId>(span.begin(), span.end());
             },
             py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", [](const Graph& g) { return from_edges(g.edges()); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    // graph-core operations
    m.def("closed_union", &closed_union, py::arg("g"), py::arg("u"), py::arg("v"));
    m.def("isolated_after_removal", &isolated_after_removal, py::arg("g"),
          py::arg("s"));
    m.def("remove_vertices", &remove_vertices, py::arg("g"), py::arg("s"));
    m.def("strip_isolated", &strip_isolated, py::arg("g"));
    m.def("connected_components", &connected_components, py::arg("g"));
    m.def("is_isomorphic_small", &is_isomorphic_small, py::arg("g"), py::arg("h"));
    m.def("disjoint_union", &disjoint_union, py::arg("a"), py::arg("b"));
    m.def("disjoint_copies", &disjoint_copies, py::arg("g"), py::arg("k"));

    // matching
    m.def("is_induced_matching",
          [](const Graph& g, const PyEdges& edges) {
              return is_induced_matching(g, to_edges(edges));
          },
          py::arg("g"), py::arg("matching"));
    m.def("matching_violation",
          [](const Graph& g, const PyEdges& edges) -> py::object {
              const auto v = find_matching_violation(g, to_edges(edges));
              if (!v) {
                  return py::none();
              }
              return py::str(v->describe());
          },
          py::arg("g"), py::arg("matching"));
    m.def("conflict_edges",
          [](const Graph& g, PyEdge e) {
              return from_edges(conflict_edges(g, Edge{e.first, e.second}));
          },
          py::arg("g"), py::arg("e"));
    m.def("conflict_graph",
          [](const Graph& g) {
              ConflictGraph cg = conflict_graph(g);
              return py::make_tuple(cg.graph, from_edges(cg.edge_of_vertex));
          },
          py::arg("g"),
          "Returns (graph, edge_of_vertex): vertex i stands for edge_of_vertex[i].");

    // exact oracle
    py::class_<ExactResult>(m, "ExactResult")
        .def_readonly("value", &ExactResult::value)
        .def_property_readonly(
            "witness", [](const ExactResult& r) { return from_edges(r.witness); })
        .def_property_readonly("status",
                               [](const ExactResult& r) {
                                   return r.status == SolveStatus::Exact
                                              ? "exact"
                                              : "budget-exhausted";
                               })
        .def_readonly("nodes_explored", &ExactResult::nodes_explored)
        .def("__repr__", [](const ExactResult& r) {
            return "ExactResult(value=" + std::to_string(r.value) + ")";
        });
    m.def("nu_s_exact", &nu_s_exact, py::arg("g"),
          py::arg("budget") = kDefaultNodeBudget);
    m.def("nu_s_bruteforce", &nu_s_bruteforce, py::arg("g"));

    // constructive
    py::class_<NeighborhoodProfile>(m, "NeighborhoodProfile")
        .def_readonly("n1", &NeighborhoodProfile::n1)
        .def_readonly("ns", &NeighborhoodProfile::ns)
        .def_readonly("nl", &NeighborhoodProfile::nl)
        .def_readonly("nd", &NeighborhoodProfile::nd);
    m.def("neighborhood_profile", &neighborhood_profile, py::arg("g"), py::arg("v"),
          py::arg("delta"));
    m.def("potential",
          [](const Graph& g, int delta) {
              const PotentialTable pt = potential(g, delta);
              std::vector<std::string> out;
              out.reserve(pt.f.size());
              for (const Rational& f : pt.f) {
                  out.push_back(rational_to_string(f));
              }
              return out;
          },
          py::arg("g"), py::arg("delta"),
          "Exact per-vertex potentials as fraction strings.");
    m.def("pad_pendant_holders",
          [](const Graph& g, int delta) {
              PadResult r = pad_pendant_holders(g, delta);
              return py::make_tuple(r.graph, r.pendant_anchor);
          },
          py::arg("g"), py::arg("delta"));
    m.def("select_edge",
          [](const Graph& g, int delta) {
              const EdgeChoice c = select_edge(g, delta, potential(g, delta));
              return py::make_tuple(PyEdge{c.edge.u, c.edge.v}, to_string(c.label),
                                    c.footprint.size());
          },
          py::arg("g"), py::arg("delta"),
          "Returns ((u, v), case_label, footprint).");

    py::class_<StepRecord>(m, "StepRecord")
        .def_property_readonly(
            "edge", [](const StepRecord& s) { return PyEdge{s.edge.u, s.edge.v}; })
        .def_property_readonly(
            "label", [](const StepRecord& s) { return to_string(s.label); })
        .def_readonly("s", &StepRecord::s)
        .def_readonly("isolated", &StepRecord::isolated)
        .def_readonly("footprint", &StepRecord::footprint)
        .def_readonly("certified", &StepRecord::certified)
        .def_property_readonly(
            "f_u", [](const StepRecord& s) { return rational_to_string(s.f_u); })
        .def_property_readonly(
            "f_v", [](const StepRecord& s) { return rational_to_string(s.f_v); });

    py::class_<RunTrace>(m, "RunTrace")
        .def_readonly("n_input", &RunTrace::n_input)
        .def_readonly("n_stripped", &RunTrace::n_stripped)
        .def_readonly("n_working_total", &RunTrace::n_working_total)
        .def_readonly("delta", &RunTrace::delta)
        .def_readonly("B", &RunTrace::bound_b)
        .def_readonly("padding_added", &RunTrace::padding_added)
        .def_readonly("delta0", &RunTrace::delta0)
        .def_readonly("bound_claimed", &RunTrace::bound_claimed)
        .def_readonly("all_certified", &RunTrace::all_certified)
        .def_readonly("guarantee", &RunTrace::guarantee)
        .def_readonly("max_potential_ratio", &RunTrace::max_potential_ratio)
        .def_readonly("steps", &RunTrace::steps);

    py::class_<RunResult>(m, "RunResult")
        .def_property_readonly(
            "matching", [](const RunResult& r) { return from_edges(r.matching); })
        .def_readonly("trace", &RunResult::trace)
        .def("__repr__", [](const RunResult& r) {
            return "RunResult(size=" + std::to_string(r.matching.size()) + ")";
        });
    m.def("constructive_run",
          [](const Graph& g, int delta0) {
              return constructive_run(g, RunConfig{delta0});
          },
          py::arg("g"), py::arg("delta0") = 1000);

    // baseline
    m.def("greedy_induced_matching",
          [](const Graph& g, const std::string& policy) {
              return from_edges(greedy_induced_matching(g, parse_policy(policy)));
          },
          py::arg("g"), py::arg("policy") = "first-edge");

    // generators
    m.def("sharpness_h1", &sharpness_h1, py::arg("delta"));
    m.def("sharpness_h2", &sharpness_h2, py::arg("delta"));
    m.def("c5_blowup",
          [](const std::vector<int>& orders) {
              if (orders.size() != 5) {
                  throw std::invalid_argument("c5_blowup needs 5 class orders");
              }
              return c5_blowup({orders[0], orders[1], orders[2], orders[3], orders[4]});
          },
          py::arg("orders"));
    m.def("attach_pendants", &attach_pendants, py::arg("base"), py::arg("k"));
    m.def("random_graph", &random_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("random_regular", &random_regular, py::arg("n"), py::arg("d"),
          py::arg("seed"));
    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("star_graph", &star_graph, py::arg("leaves"));
    m.def("complete_graph", &complete_graph, py::arg("n"));

    // bounds
    m.def("bound_B", &bound_B, py::arg("delta"));
    m.def("theorem_guarantee", &theorem_guarantee, py::arg("n"), py::arg("delta"));
    m.def("trivial_guarantee", &trivial_guarantee, py::arg("n"), py::arg("delta"));
    m.def("helper_inequality_check", &helper_inequality_check, py::arg("delta"));
    m.def("conjecture_check",
          [](const Graph& g, long long budget) {
              py::list out;
              for (const ComponentCheck& check : conjecture_check(g, budget)) {
                  py::dict d;
                  d["vertices"] = check.component;
                  d["n"] = check.n;
                  d["delta"] = check.delta;
                  d["guarantee"] = check.guarantee;
                  d["nu_s"] = check.nu.value;
                  d["witness"] = from_edges(check.nu.witness);
                  d["status"] = to_string(check.status);
                  out.append(std::move(d));
              }
              return out;
          },
          py::arg("g"), py::arg("budget") = kDefaultNodeBudget);

    // io and scanning
    m.def("parse_edge_list",
          [](const std::string& text) { return parse_edge_list(text); },
          py::arg("text"));
    m.def("write_edge_list", &write_edge_list, py::arg("g"));
    m.def("_scan_exhaustive_json",
          [](int max_n, long long budget) {
              return dump_json(scan_report_to_json(run_exhaustive_scan(max_n, budget)));
          },
          py::arg("max_n"), py::arg("budget") = kDefaultNodeBudget);
    m.def("_scan_random_json",
          [](long long trials, int max_n, uint64_t seed, long long budget) {
              return dump_json(
                  scan_report_to_json(run_random_scan(trials, max_n, seed, budget)));
          },
          py::arg("trials"), py::arg("max_n"), py::arg("seed"),
          py::arg("budget") = kDefaultNodeBudget);
}
