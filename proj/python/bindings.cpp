#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contractdom/domination.hpp"
#include "contractdom/generators.hpp"
#include "contractdom/oracle.hpp"
#include "contractdom/polyalgo.hpp"
#include "contractdom/report.hpp"
#include "contractdom/structure.hpp"

namespace py = pybind11;
namespace cd = contractdom;

namespace {

std::vector<int> to_list(cd::VertexSet s) { return s.to_vector(); }

cd::VertexSet from_list(const std::vector<int>& v) { return cd::VertexSet::from_vector(v); }

py::object optional_pair(const std::optional<cd::Edge>& e) {
  if (!e) return py::none();
  return py::make_tuple(e->u, e->v);
}

py::object optional_list(const std::optional<cd::VertexSet>& s) {
  if (!s) return py::none();
  return py::cast(to_list(*s));
}

cd::Method method_arg(const std::string& name) { return cd::method_from_string(name); }

cd::CoverRule rule_arg(const std::string& name) {
  if (name == "closed") return cd::CoverRule::closed;
  if (name == "open") return cd::CoverRule::open;
  throw cd::PreconditionError("cover rule must be 'closed' or 'open'");
}

cd::StructuralOptions options(bool verify_free, bool verify_witness, const std::string& rule) {
  cd::StructuralOptions o;
  o.verify_free = verify_free;
  o.verify_witness = verify_witness;
  o.cover_rule = rule_arg(rule);
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of contractdom";

  py::register_exception<cd::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<cd::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<cd::StructuralViolation>(m, "StructuralViolation", PyExc_RuntimeError);

  py::class_<cd::Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return cd::Graph::from_edge_list(n, edges);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_static("parse", &cd::parse_edge_list, py::arg("text"))
      .def("to_text", [](const cd::Graph& g) { return cd::format_edge_list(g); })
      .def_property_readonly("order", &cd::Graph::order)
      .def_property_readonly("edge_count", &cd::Graph::edge_count)
      .def("edges",
           [](const cd::Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (cd::Edge e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("neighbours", [](const cd::Graph& g, int v) { return to_list(g.neighbours(v)); })
      .def("has_edge", [](const cd::Graph& g, int u, int v) { return g.has_edge(cd::Edge(u, v)); })
      .def("is_connected", [](const cd::Graph& g) { return cd::is_connected(g); })
      .def("is_dominating", [](const cd::Graph& g, const std::vector<int>& d) { return cd::is_dominating(g, from_list(d)); })
      .def("digest", [](const cd::Graph& g) { return cd::digest(g); })
      .def("__eq__", [](const cd::Graph& a, const cd::Graph& b) { return a == b; })
      .def("__repr__", [](const cd::Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<cd::Decision>(m, "Decision")
      .def_property_readonly("yes", &cd::Decision::yes)
      .def_property_readonly("method", [](const cd::Decision& d) { return std::string(cd::to_string(d.method)); })
      .def_property_readonly("fired_step", [](const cd::Decision& d) { return d.provenance.fired_step; })
      .def_property_readonly("j", [](const cd::Decision& d) { return d.provenance.j; })
      .def_property_readonly("gamma", [](const cd::Decision& d) { return d.provenance.gamma; })
      .def_property_readonly("f", [](const cd::Decision& d) { return d.provenance.f; })
      .def_property_readonly("a", [](const cd::Decision& d) { return optional_list(d.provenance.a_set); })
      .def_property_readonly("witness_edge", [](const cd::Decision& d) { return optional_pair(d.witness_edge); })
      .def_property_readonly("witness_set", [](const cd::Decision& d) { return optional_list(d.witness_set); })
      .def("to_json", [](const cd::Decision& d) { return cd::to_json(d).dump(); })
      .def("__repr__", [](const cd::Decision& d) {
        return "Decision(" + std::string(cd::to_string(d.answer)) + ", " + std::string(cd::to_string(d.method)) +
               ", step=" + d.provenance.fired_step + ")";
      });

  m.def(
      "gamma",
      [](const cd::Graph& g) -> py::object {
        auto r = cd::gamma(g);
        return py::make_tuple(r->gamma, to_list(r->witness));
      },
      py::arg("graph"), "Domination number and the lexicographically smallest minimum dominating set.");
  m.def("domination_number", [](const cd::Graph& g) { return *cd::domination_number(g); }, py::arg("graph"));
  m.def(
      "enumerate_min_ds",
      [](const cd::Graph& g) {
        std::vector<std::vector<int>> out;
        for (cd::VertexSet s : cd::enumerate_min_ds(g)) out.push_back(to_list(s));
        return out;
      },
      py::arg("graph"));
  m.def(
      "contract_edge",
      [](const cd::Graph& g, int u, int v) {
        auto c = cd::contract_edge(g, cd::Edge(u, v));
        return py::make_tuple(c.graph, c.rename);
      },
      py::arg("graph"), py::arg("u"), py::arg("v"));

  m.def("decide_bruteforce", &cd::decide_bruteforce, py::arg("graph"));
  m.def("decide_characterization", &cd::decide_characterization, py::arg("graph"));
  m.def(
      "decide_structural",
      [](const cd::Graph& g, int k, bool verify_free, bool verify_witness, const std::string& rule) {
        return cd::decide_structural(g, k, options(verify_free, verify_witness, rule));
      },
      py::arg("graph"), py::arg("k"), py::arg("verify_free") = true, py::arg("verify_witness") = false,
      py::arg("cover_rule") = "closed");
  m.def(
      "decide_driver",
      [](const cd::Graph& g, int k_max, bool verify_free, bool verify_witness, const std::string& rule) {
        return cd::decide_driver(g, k_max, options(verify_free, verify_witness, rule));
      },
      py::arg("graph"), py::arg("k_max"), py::arg("verify_free") = true, py::arg("verify_witness") = false,
      py::arg("cover_rule") = "closed");
  m.def(
      "decide",
      [](const cd::Graph& g, const std::string& method, int k) {
        switch (method_arg(method)) {
          case cd::Method::bruteforce:
            return cd::decide_bruteforce(g);
          case cd::Method::characterization:
            return cd::decide_characterization(g);
          case cd::Method::structural:
            return cd::decide_driver(g, k);
        }
        throw cd::PreconditionError("unknown method");
      },
      py::arg("graph"), py::arg("method") = "oracle", py::arg("k") = 1);

  m.def(
      "find_induced",
      [](const cd::Graph& g, int j) -> py::object {
        auto hit = cd::find_induced(g, cd::PatternSpec::p3_plus_p2(j));
        return hit ? py::cast(to_list(*hit)) : py::none();
      },
      py::arg("graph"), py::arg("j"), "First induced P3 + j·P2, or None.");
  m.def(
      "is_free", [](const cd::Graph& g, int k) { return cd::is_free(g, cd::PatternSpec::p3_plus_p2(k)); },
      py::arg("graph"), py::arg("k"), "True when the graph has no induced P3 + k·P2.");

  m.def(
      "named",
      [](const std::string& family, int n, int m) { return cd::named(cd::family_from_string(family), n, m); },
      py::arg("family"), py::arg("n"), py::arg("m") = 0);
  m.def("exhaustive_connected", &cd::exhaustive_connected, py::arg("n"), py::arg("allow_large") = false);
  m.def(
      "random_free_connected",
      [](int n, double p, int k, std::uint64_t seed, int budget) -> py::object {
        auto g = cd::random_free_connected(n, p, k, seed, budget);
        return g ? py::cast(*g) : py::none();
      },
      py::arg("n"), py::arg("p"), py::arg("k"), py::arg("seed"), py::arg("budget") = 10000);
}
