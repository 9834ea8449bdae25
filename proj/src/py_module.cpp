#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "treespan/graph.hpp"
#include "treespan/oracle.hpp"
#include "treespan/random_tree.hpp"
#include "treespan/tree_span.hpp"
#include "treespan/witness.hpp"

namespace py = pybind11;
using namespace treespan;

PYBIND11_MODULE(_treespan, m) {
    m.doc() = "Strong vertex/edge span of trees";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges);

    py::class_<Tree>(m, "Tree")
        .def(py::init<Graph>())
        .def_property_readonly("graph", &Tree::graph)
        .def_property_readonly("num_vertices", &Tree::num_vertices);

    py::enum_<SpanKind>(m, "SpanKind")
        .value("trivial", SpanKind::trivial)
        .value("path", SpanKind::path)
        .value("triod", SpanKind::triod);

    py::class_<SpanResult>(m, "SpanResult")
        .def_readonly("span", &SpanResult::span)
        .def_readonly("kind", &SpanResult::kind)
        .def_readonly("witness_vertex", &SpanResult::witness_vertex)
        .def_readonly("eta", &SpanResult::eta)
        .def_readonly("radius", &SpanResult::radius);

    py::class_<WalkPair>(m, "WalkPair")
        .def(py::init<>())
        .def_readwrite("a", &WalkPair::a)
        .def_readwrite("b", &WalkPair::b)
        .def_readwrite("claimed_span", &WalkPair::claimed_span)
        .def("to_json", &walk_pair_to_json);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("valid_a", &VerifyReport::valid_a)
        .def_readonly("valid_b", &VerifyReport::valid_b)
        .def_readonly("surjective_a", &VerifyReport::surjective_a)
        .def_readonly("surjective_b", &VerifyReport::surjective_b)
        .def_readonly("min_distance", &VerifyReport::min_distance)
        .def_readonly("passed", &VerifyReport::pass)
        .def("to_json", &VerifyReport::to_json);

    m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); },
          "Parse the edge-list text format into a Graph");
    m.def("format_edge_list", &format_edge_list);
    m.def("validate_tree", &validate_tree);
    m.def("strong_vertex_span", &strong_vertex_span);
    m.def("strong_edge_span", &strong_edge_span);
    m.def("brute_triod_size", &brute_triod_size);
    m.def("tree_triod_size", &tree_triod_size);
    m.def("product_span_oracle", &product_span_oracle);
    m.def("build_witness", &build_witness);
    m.def("verify_walk_pair", &verify_walk_pair, py::arg("graph"), py::arg("walk_pair"),
          py::arg("claimed"));
    m.def("walk_pair_from_json", &walk_pair_from_json);
    m.def(
        "random_tree",
        [](int n, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            return random_tree(n, rng);
        },
        py::arg("n"), py::arg("seed") = 0);
    m.def("enumerate_labeled_trees", [](int n) {
        std::vector<Tree> out;
        enumerate_labeled_trees(n, [&](const Tree& t) { out.push_back(t); });
        return out;
    });
    m.def("labeled_tree_count", &labeled_tree_count);
}
