#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "oddsub/certify.hpp"
#include "oddsub/coloring.hpp"
#include "oddsub/edge_list.hpp"
#include "oddsub/enumerate.hpp"
#include "oddsub/families.hpp"
#include "oddsub/oracle.hpp"
#include "oddsub/partition.hpp"
#include "oddsub/structure.hpp"

namespace py = pybind11;
using namespace oddsub;

namespace {

Graph graph_from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges, bool dedupe) {
    return build_graph(n, edges, dedupe);
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

SearchOptions options(std::optional<std::uint64_t> budget, int threads, bool split_components) {
    SearchOptions o;
    o.budget = budget;
    o.threads = threads;
    o.split_components = split_components;
    return o;
}

py::object fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(r.num(), r.den());
}

}  // namespace

PYBIND11_MODULE(_oddsub, m) {
    m.doc() = "Odd induced subgraphs: exact oracles and lower-bound certificates";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<GraphError>(m, "GraphError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<SizeLimitError>(m, "SizeLimitError", base.ptr());
    py::register_exception<BoundNotAchieved>(m, "BoundNotAchieved", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"), py::arg("dedupe") = false)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", &edge_pairs)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, Vertex v) {
            auto nb = g.neighbors(v);
            return std::vector<Vertex>(nb.begin(), nb.end());
        })
        .def("adjacent", &Graph::adjacent)
        .def("to_edge_list", &to_edge_list)
        .def_static("from_edge_list", [](const std::string& text, bool dedupe) {
            std::istringstream in(text);
            return read_edge_list(in, dedupe);
        }, py::arg("text"), py::arg("dedupe") = false)
        .def_static("from_spec", [](const std::string& spec) { return generate_family(parse_family(spec)); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("star_graph", &star_graph);
    m.def("f_graph", &f_graph);
    m.def("gkl_graph", &gkl_graph);
    m.def("petersen_graph", &petersen_graph);
    m.def("random_regular_graph", &random_regular_graph);
    m.def("random_gnm_graph", &random_gnm_graph);
    m.def("line_graph", [](const Graph& g) { return line_graph(g).lg; });
    m.def("is_odd_induced", [](const Graph& g, std::vector<Vertex> s) { return is_odd_induced(g, VertexSet(std::move(s))); });
    m.def("is_even_induced", [](const Graph& g, std::vector<Vertex> s) { return is_even_induced(g, VertexSet(std::move(s))); });

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("value", &OracleResult::value)
        .def_property_readonly("witness", [](const OracleResult& r) { return r.witness.to_vector(); })
        .def_readonly("nodes_explored", &OracleResult::nodes_explored)
        .def_readonly("complete", &OracleResult::complete)
        .def_property_readonly("elapsed_seconds", [](const OracleResult& r) {
            return std::chrono::duration<double>(r.elapsed).count();
        });

    m.def("fo_exact", [](const Graph& g, std::optional<std::uint64_t> budget, int threads, bool split) {
        py::gil_scoped_release release;
        return fo_exact(g, options(budget, threads, split));
    }, py::arg("g"), py::arg("budget") = py::none(), py::arg("threads") = 1, py::arg("split_components") = true);
    m.def("fk_exact", [](const Graph& g, int k, std::optional<std::uint64_t> budget, int threads, bool split) {
        py::gil_scoped_release release;
        return fk_exact(g, k, options(budget, threads, split));
    }, py::arg("g"), py::arg("k"), py::arg("budget") = py::none(), py::arg("threads") = 1,
       py::arg("split_components") = true);
    m.def("max_induced_matching", [](const Graph& g) {
        auto r = max_induced_matching(g);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : r.edges) edges.emplace_back(e.u, e.v);
        return edges;
    });

    m.def("gallai_partition", [](const Graph& g) {
        auto p = gallai_partition(g);
        return std::make_pair(p.odd_part.to_vector(), p.even_part.to_vector());
    });
    m.def("even_even_partition", [](const Graph& g) {
        auto p = even_even_partition(g);
        return std::make_pair(p.first.to_vector(), p.second.to_vector());
    });
    m.def("chromatic_number", [](const Graph& g) {
        auto c = chromatic_number(g);
        return std::make_pair(c.k, c.colors);
    });
    m.def("classify", [](const Graph& g) {
        auto r = classify(g);
        py::dict d;
        d["is_connected"] = r.is_connected;
        d["is_bipartite"] = r.is_bipartite;
        d["regular_degree"] = r.regular_degree;
        d["min_degree"] = r.min_degree;
        d["max_degree"] = r.max_degree;
        d["girth"] = r.girth;
        d["claw_free"] = r.claw_free;
        d["k1r_free_from"] = r.k1r_free_from;
        d["c5_subgraph_free"] = r.c5_subgraph_free;
        return d;
    });
    m.def("canonical_form", &canonical_form);
    m.def("are_isomorphic", &are_isomorphic);
    m.def("enumerate_connected_regular", &enumerate_connected_regular);

    py::class_<Certificate>(m, "Certificate")
        .def_property_readonly("witness", [](const Certificate& c) { return c.witness.to_vector(); })
        .def_property_readonly("target", [](const Certificate& c) {
            return c.target == CertificateTarget::Graph ? "G" : "L(G)";
        })
        .def_property_readonly("bound", [](const Certificate& c) { return fraction(c.bound); })
        .def_readonly("theorem_tag", &Certificate::theorem_tag)
        .def_readonly("trace", &Certificate::trace)
        .def_property_readonly("size", &Certificate::size)
        .def("meets_bound", &Certificate::meets_bound);

    m.def("verify_certificate", &verify_certificate);
    m.def("odd_cert_cycle", &odd_cert_cycle);
    m.def("odd_cert_path", &odd_cert_path);
    m.def("clawfree_cert", [](const Graph& g) { return clawfree_cert(g); });
    m.def("linegraph_cert", &linegraph_cert);
    m.def("linegraph_cert_extended", &linegraph_cert_extended);
    m.def("planar_reduction", [](const Graph& g, bool planar_asserted) {
        return planar_reduction(g, planar_asserted).to_vector();
    }, py::arg("g"), py::arg("planar_asserted"));
    m.def("counterexample_for_order", [](int n, int r) {
        auto rec = counterexample_for_order(n, r);
        py::dict d;
        d["graph"] = rec.graph;
        d["k"] = rec.k;
        d["l"] = rec.ell;
        d["chromatic"] = rec.chromatic;
        d["star_free"] = rec.star_free;
        d["fo"] = rec.fo_componentwise;
        d["violates"] = rec.violates();
        return d;
    }, py::arg("n"), py::arg("r") = 4);
}
