#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mce/bron_kerbosch.hpp"
#include "mce/degeneracy.hpp"
#include "mce/error.hpp"
#include "mce/extremal.hpp"
#include "mce/graph.hpp"
#include "mce/oracle.hpp"

namespace py = pybind11;

namespace {

using Enumerator = mce::EnumerationStats (*)(const mce::Graph&, const mce::CliqueVisitor&,
                                             const mce::EnumerationHooks&);

mce::EnumerationStats run_with_callback(Enumerator fn, const mce::Graph& g,
                                        const std::optional<py::function>& visitor) {
    if (!visitor) {
        py::gil_scoped_release release;
        return fn(g, {}, {});
    }
    return fn(
        g,
        [&](std::span<const mce::Vertex> clique) {
            (*visitor)(std::vector<mce::Vertex>(clique.begin(), clique.end()));
        },
        {});
}

std::vector<mce::Vertex> to_vector(std::span<const mce::Vertex> s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Degeneracy-ordered Bron-Kerbosch maximal clique enumeration";

    py::register_exception<mce::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<mce::SizeError>(m, "SizeError", PyExc_ValueError);
    py::register_exception<mce::ContractError>(m, "ContractError", PyExc_RuntimeError);

    py::class_<mce::Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<mce::Edge>& edges) {
                 return mce::graph_from_edges(n, edges);
             }),
             py::arg("n"), py::arg("edges") = std::vector<mce::Edge>{})
        .def_static("parse", [](const std::string& text) { return mce::parse_edge_list(text); },
                    py::arg("text"), "Parse edge-list text.")
        .def_property_readonly("vertex_count", &mce::Graph::vertex_count)
        .def_property_readonly("edge_count", &mce::Graph::edge_count)
        .def_property_readonly("max_degree", &mce::Graph::max_degree)
        .def("degree",
             [](const mce::Graph& g, mce::Vertex v) { return mce::neighborhood(g, v).size(); })
        .def("neighbors", [](const mce::Graph& g, mce::Vertex v) { return mce::neighborhood(g, v).ids(); })
        .def("has_edge", &mce::Graph::has_edge)
        .def("edges", &mce::Graph::edges)
        .def("to_edge_list",
             [](const mce::Graph& g) {
                 std::ostringstream out;
                 mce::write_edge_list(g, out);
                 return out.str();
             })
        .def("__eq__", [](const mce::Graph& a, const mce::Graph& b) { return a == b; })
        .def("__repr__", [](const mce::Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("neighborhood", [](const mce::Graph& g, mce::Vertex v) { return mce::neighborhood(g, v).ids(); });
    m.def("common_neighborhood", [](const mce::Graph& g, std::vector<mce::Vertex> w) {
        return mce::common_neighborhood(g, mce::VertexSet(std::move(w))).ids();
    });

    py::class_<mce::DegeneracyOrdering>(m, "DegeneracyOrdering")
        .def_property_readonly("degeneracy", &mce::DegeneracyOrdering::degeneracy)
        .def_property_readonly("order",
                               [](const mce::DegeneracyOrdering& o) { return to_vector(o.order()); })
        .def("position", &mce::DegeneracyOrdering::position)
        .def("later_neighbors", [](const mce::DegeneracyOrdering& o, mce::Vertex v) {
            if (v >= o.vertex_count()) {
                throw mce::InputError("vertex out of range");
            }
            return to_vector(o.later_neighbors(v));
        });

    m.def("degeneracy_ordering", &mce::degeneracy_ordering, py::arg("g"));
    m.def("later_earlier_split", [](const mce::DegeneracyOrdering& o, const mce::Graph& g, mce::Vertex v) {
        auto [p, x] = mce::later_earlier_split(o, g, v);
        return py::make_tuple(p.ids(), x.ids());
    });
    m.def("check_edge_bound", &mce::check_edge_bound, py::arg("g"), py::arg("d"));

    py::class_<mce::EnumerationStats>(m, "EnumerationStats")
        .def_readonly("clique_count", &mce::EnumerationStats::clique_count)
        .def_readonly("recursive_calls", &mce::EnumerationStats::recursive_calls)
        .def_readonly("max_depth", &mce::EnumerationStats::max_depth)
        .def_property_readonly("elapsed_seconds", [](const mce::EnumerationStats& s) {
            return std::chrono::duration<double>(s.elapsed).count();
        });

    m.def("enumerate_naive",
          [](const mce::Graph& g, std::optional<py::function> visitor) {
              return run_with_callback(&mce::enumerate_naive, g, visitor);
          },
          py::arg("g"), py::arg("visitor") = py::none());
    m.def("enumerate_pivot",
          [](const mce::Graph& g, std::optional<py::function> visitor) {
              return run_with_callback(&mce::enumerate_pivot, g, visitor);
          },
          py::arg("g"), py::arg("visitor") = py::none());
    m.def("enumerate_degeneracy",
          [](const mce::Graph& g, std::optional<py::function> visitor) {
              return run_with_callback(&mce::enumerate_degeneracy, g, visitor);
          },
          py::arg("g"), py::arg("visitor") = py::none());

    m.def(
        "maximal_cliques",
        [](const mce::Graph& g, const std::string& algorithm) {
            if (algorithm == "oracle") {
                return mce::enumerate_oracle(g);
            }
            if (algorithm == "subsets") {
                return mce::enumerate_subsets_degeneracy(g);
            }
            Enumerator fn = nullptr;
            if (algorithm == "degeneracy") {
                fn = &mce::enumerate_degeneracy;
            } else if (algorithm == "pivot") {
                fn = &mce::enumerate_pivot;
            } else if (algorithm == "naive") {
                fn = &mce::enumerate_naive;
            } else {
                throw mce::InputError("unknown algorithm '" + algorithm + "'");
            }
            mce::CliqueSet out;
            {
                py::gil_scoped_release release;
                fn(g, [&](std::span<const mce::Vertex> c) { out.emplace_back(c.begin(), c.end()); }, {});
            }
            mce::canonicalize(out);
            return out;
        },
        py::arg("g"), py::arg("algorithm") = "degeneracy",
        "Canonical clique list: each clique ascending, cliques sorted.");

    m.def("moon_moser_graph", &mce::moon_moser_graph, py::arg("n"));
    m.def("lower_bound_graph", &mce::lower_bound_graph, py::arg("n"), py::arg("d"));
    m.def("max_clique_count_bound", &mce::max_clique_count_bound, py::arg("n"), py::arg("d"));
    m.def("random_gnp", &mce::random_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("path_graph", &mce::path_graph, py::arg("n"));
    m.def("complete_graph", &mce::complete_graph, py::arg("n"));
    m.def("empty_graph", &mce::empty_graph, py::arg("n"));

    m.def("is_maximal_clique", [](const mce::Graph& g, const std::vector<mce::Vertex>& c) {
        return mce::is_maximal_clique(g, c);
    });
    m.def("enumerate_oracle", &mce::enumerate_oracle, py::arg("g"));
    m.def("enumerate_subsets_degeneracy",
          [](const mce::Graph& g) { return mce::enumerate_subsets_degeneracy(g); }, py::arg("g"));
}
