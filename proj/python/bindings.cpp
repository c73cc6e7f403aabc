#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coedge/canonical.hpp"
#include "coedge/enumerate.hpp"
#include "coedge/io.hpp"
#include "coedge/pipeline.hpp"
#include "coedge/recognizers.hpp"
#include "coedge/regularity.hpp"
#include "coedge/report.hpp"
#include "coedge/spectrum.hpp"
#include "coedge/subgraph.hpp"

namespace py = pybind11;
using namespace coedge;

namespace {

py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::object to_py(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(r.str()); }

Rational rational_arg(const py::object& o) {
  return rational_from_string(py::str(o).cast<std::string>());
}

/// JSON values map onto plain Python containers through the json module.
py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict spectrum_dict(const Spectrum& s) {
  py::list coeffs;
  for (const auto& c : s.charpoly.coeffs()) coeffs.append(to_py(c));
  py::list roots;
  for (const auto& e : s.roots) {
    py::dict r;
    py::list poly;
    for (const auto& c : e.value.poly.coeffs()) poly.append(to_py(c));
    r["poly"] = poly;
    r["lo"] = to_py(e.value.lo);
    r["hi"] = to_py(e.value.hi);
    r["exact"] = e.value.exact;
    r["multiplicity"] = e.multiplicity;
    roots.append(r);
  }
  py::dict d;
  d["charpoly"] = coeffs;
  d["roots"] = roots;
  d["distinct_count"] = s.distinct_count;
  return d;
}

int ordering_sign(std::strong_ordering c) {
  return c == std::strong_ordering::less ? -1 : c == std::strong_ordering::greater ? 1 : 0;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spectral and combinatorial analysis of co-edge-regular graphs";

  const auto& error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("label", &Graph::label)
      .def("edges", &Graph::edges)
      .def("edge_count", &Graph::edge_count)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, int x) { return g.neighbors(x).members(); })
      .def("is_connected", &Graph::is_connected)
      .def("permuted", [](const Graph& g, const std::vector<int>& perm) { return g.permuted(perm); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) +
               (g.label().empty() ? "" : " " + g.label()) + ">";
      });

  m.def("named_family", [](const std::string& name, const std::vector<int>& params) {
    return named_family(name, params);
  }, py::arg("name"), py::arg("params") = std::vector<int>{});
  m.def("grid_graph", &grid_graph);
  m.def("petersen_graph", &petersen_graph);
  m.def("shrikhande_graph", &shrikhande_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("s_clique_extension", &s_clique_extension);
  m.def("cone", &cone);
  m.def("disjoint_union", &disjoint_union);
  m.def("complement", &complement);

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("encode_graph6", &encode_graph6);
  m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); });
  m.def("encode_edge_list", &encode_edge_list);

  m.def("charpoly", [](const Graph& g) {
    py::list out;
    const ExactPolynomial poly = char_poly(g);
    for (const auto& c : poly.coeffs()) out.append(to_py(c));
    return out;
  }, "Coefficients of det(xI - A), ascending degree.");
  m.def("spectrum", [](const Graph& g) { return spectrum_dict(spectrum(g)); });
  m.def("distinct_eigenvalue_count", &distinct_eigenvalue_count);
  m.def("cmp_min_eigenvalue", [](const Graph& g, const py::object& r) {
    return ordering_sign(cmp_min_eigenvalue(g, rational_arg(r)));
  }, "Sign of theta_min - r as -1, 0 or 1.");

  m.def("regularity_report", [](const Graph& g) { return json_to_py(to_json(regularity_report(g))); });
  m.def("co_edge_regular_params", [](const Graph& g) -> py::object {
    const auto p = co_edge_regular_params(g);
    if (!p) return py::none();
    return py::make_tuple(p->n, p->k, p->c);
  });
  m.def("strongly_co_edge_regular_ell", [](const Graph& g) -> py::object {
    const auto l = strongly_co_edge_regular_ell(g);
    if (!l) return py::none();
    return py::int_(*l);
  });
  m.def("is_walk_regular", [](const Graph& g) { return is_walk_regular(g).walk_regular; });
  m.def("strongly_regular_params", [](const Graph& g) -> py::object {
    const auto p = strongly_regular_params(g);
    if (!p) return py::none();
    return py::make_tuple(p->n, p->k, p->a, p->c);
  });
  m.def("srg_eigen_data", [](int n, int k, int a, int c) {
    const auto d = srg_eigen_data(n, k, a, c);
    py::dict out;
    out["theta"] = d.theta.exact ? to_py(d.theta.lo) : py::str(d.theta.to_string());
    out["tau"] = d.tau.exact ? to_py(d.tau.lo) : py::str(d.tau.to_string());
    out["m_theta"] = d.m_theta;
    out["m_tau"] = d.m_tau;
    out["conference"] = d.conference;
    out["trace_ok"] = d.trace_ok;
    return out;
  });
  m.def("ell_from_spectrum", [](const Graph& g, int c) { return to_py(ell_from_spectrum(g, c)); });
  m.def("hoffman_residual_is_zero", [](const Graph& g) { return hoffman_residual(g).zero; });
  m.def("moment_identities", [](const Graph& g) { return json_to_py(to_json(moment_identities(g))); });

  m.def("contains_induced", [](const Graph& host, const Graph& pattern) -> py::object {
    const auto e = contains_induced(host, pattern);
    if (!e) return py::none();
    return py::cast(e->map);
  });
  m.def("has_induced_quadrangle", [](const Graph& g) -> py::object {
    const auto q = has_induced_quadrangle(g);
    if (!q) return py::none();
    return py::cast(std::vector<int>(q->begin(), q->end()));
  });
  m.def("max_clique", [](const Graph& g) {
    const auto r = max_clique(g);
    return py::make_tuple(r.size, r.witness.members());
  });
  m.def("max_independent_set", [](const Graph& g) {
    const auto r = max_independent_set(g);
    return py::make_tuple(r.size, r.witness.members());
  });
  m.def("forbidden_minus3_scan", [](const Graph& g) {
    py::list out;
    for (const auto& h : forbidden_minus3_scan(g)) out.append(json_to_py(to_json(h)));
    return out;
  });

  m.def("is_isomorphic", &is_isomorphic);
  m.def("canonical_graph6", [](const Graph& g) { return encode_graph6(canonical_form(g).graph(g)); });
  m.def("recognize_grid", [](const Graph& g) -> py::object {
    const auto r = recognize_grid(g);
    if (!r) return py::none();
    return py::make_tuple(r->p, r->q, r->isomorphism);
  });
  m.def("recognize_clique_extension", [](const Graph& g) {
    const auto r = recognize_clique_extension(g);
    return py::make_tuple(r.s, r.quotient);
  });

  m.def("classify", [](const Graph& g, const std::string& theorem) {
    return json_to_py(to_json(classify(g, theorem)));
  }, py::arg("graph"), py::arg("theorem"));
  m.def("enumerate_regular", &enumerate_regular);
  m.def("search_co_edge_regular", &search_co_edge_regular);
}
