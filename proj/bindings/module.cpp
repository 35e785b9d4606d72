#include "nutforge/families.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/nutcert.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace nutforge;

namespace {

py::object big_int(const mpz_class& value) {
  const std::string s = value.get_str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

mpz_class to_mpz(const py::handle& obj) {
  return mpz_class(py::str(obj).cast<std::string>(), 10);
}

py::list poly_to_list(const IntPoly& p) {
  py::list coeffs;
  for (const auto& c : p.coeffs()) coeffs.append(big_int(c));
  return coeffs;
}

IntPoly poly_from_list(const py::sequence& coeffs) {
  std::vector<mpz_class> c;
  c.reserve(static_cast<std::size_t>(py::len(coeffs)));
  for (const auto& item : coeffs) c.push_back(to_mpz(item));
  return IntPoly(std::move(c));
}

py::object kernel_to_object(const std::optional<std::vector<mpz_class>>& kernel) {
  if (!kernel) return py::none();
  py::list entries;
  for (const auto& e : *kernel) entries.append(big_int(e));
  return entries;
}

py::dict certificate_to_dict(const NutCertificate& cert) {
  py::dict d;
  d["is_nut"] = cert.is_nut;
  d["order"] = cert.order;
  d["degree"] = cert.degree ? py::object(py::int_(*cert.degree)) : py::none();
  d["nullity"] = cert.nullity;
  d["kernel_vector"] = kernel_to_object(cert.kernel_vector);
  d["route"] = to_string(cert.route);
  if (cert.failure_reason) {
    py::dict reason;
    reason["kind"] = to_string(cert.failure_reason->kind);
    reason["witness_orders"] = cert.failure_reason->witness_orders;
    reason["witness_factor"] =
        cert.failure_reason->witness_factor
            ? py::object(py::str(cert.failure_reason->witness_factor->to_string()))
            : py::none();
    d["failure_reason"] = std::move(reason);
  } else {
    d["failure_reason"] = py::none();
  }
  if (!cert.cyclotomic_orders.empty())
    d["cyclotomic_orders"] = cert.cyclotomic_orders;
  return d;
}

py::dict ell_to_dict(const EllReport& report) {
  py::dict d;
  d["alpha"] = report.alpha;
  d["beta"] = report.beta;
  d["ell"] = report.ell;
  d["factor_orders"] = report.factor_orders.orders;
  d["r_degree"] = report.r_degree;
  return d;
}

ProductStrategy parse_strategy(const std::string& name) {
  if (name == "direct") return ProductStrategy::direct;
  if (name == "polynomial") return ProductStrategy::polynomial;
  throw std::invalid_argument("strategy must be 'direct' or 'polynomial'");
}

ConjectureVariant parse_variant(const std::string& name) {
  if (name == "i") return ConjectureVariant::i;
  if (name == "ii") return ConjectureVariant::ii;
  if (name == "iii") return ConjectureVariant::iii;
  throw std::invalid_argument("variant must be 'i', 'ii' or 'iii'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact construction and certification of regular nut graphs";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"),
           py::arg("edges"))
      .def_readonly("n", &Graph::n)
      .def_readonly("edges", &Graph::edges)
      .def("degrees", &Graph::degrees)
      .def("regular_degree",
           [](const Graph& g) -> py::object {
             auto d = g.regular_degree();
             return d ? py::object(py::int_(*d)) : py::none();
           })
      .def("is_bipartite", &Graph::is_bipartite)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n) + ", edges=" +
               std::to_string(g.edges.size()) + ")";
      });

  m.def("circulant", [](int n, const std::vector<int>& jumps) {
    return circulant(CirculantSpec(n, jumps));
  }, py::arg("n"), py::arg("jumps"));
  m.def("connection_poly", [](int n, const std::vector<int>& jumps) {
    return poly_to_list(connection_poly(CirculantSpec(n, jumps)));
  }, py::arg("n"), py::arg("jumps"));
  m.def("cartesian_product", &cartesian_product, py::arg("g"), py::arg("h"));
  m.def("named_graph", [](const std::string& name) { return named_graph(name); },
        py::arg("name"));
  m.def("named_graph_names", &named_graph_names);
  m.def("graph6_encode", &graph6_encode, py::arg("graph"));
  m.def("graph6_decode", [](const std::string& text) { return graph6_decode(text); },
        py::arg("text"));

  m.def("euler_phi", &euler_phi, py::arg("n"));
  m.def("cyclotomic", [](unsigned long b) { return poly_to_list(cyclotomic(b)); },
        py::arg("b"));
  m.def("cyclotomic_factors", [](const py::sequence& coeffs) {
    return cyclotomic_factors(poly_from_list(coeffs)).orders;
  }, py::arg("coeffs"));
  m.def("poly_gcd", [](const py::sequence& a, const py::sequence& b) {
    return poly_to_list(poly_gcd(poly_from_list(a), poly_from_list(b)));
  }, py::arg("a"), py::arg("b"));
  m.def("laurent_substitute",
        [](const py::sequence& chi, const py::sequence& q_pos, unsigned long alpha) {
          return poly_to_list(
              laurent_substitute(poly_from_list(chi), poly_from_list(q_pos), alpha));
        },
        py::arg("chi"), py::arg("q_pos"), py::arg("alpha"));

  m.def("charpoly", [](const Graph& g) { return poly_to_list(charpoly(g.adjacency())); },
        py::arg("graph"));
  m.def("circulant_charpoly", [](int n, const std::vector<int>& jumps) {
    return poly_to_list(circulant_charpoly(CirculantSpec(n, jumps)));
  }, py::arg("n"), py::arg("jumps"));
  m.def("nullity_kernel", [](const Graph& g) {
    const KernelResult r = nullity_kernel(g.adjacency());
    py::dict d;
    d["nullity"] = r.nullity;
    d["kernel_vector"] = kernel_to_object(r.kernel_vector);
    d["full"] = r.full ? py::object(py::bool_(*r.full)) : py::none();
    return d;
  }, py::arg("graph"));

  m.def("is_nut", [](const Graph& g) { return certificate_to_dict(is_nut(g)); },
        py::arg("graph"));
  m.def("circulant_is_nut", [](int n, const std::vector<int>& jumps) {
    return certificate_to_dict(circulant_is_nut(CirculantSpec(n, jumps)));
  }, py::arg("n"), py::arg("jumps"));
  m.def("product_is_nut",
        [](const Graph& g, const Graph& h, const std::string& strategy) {
          return certificate_to_dict(product_is_nut(g, h, parse_strategy(strategy)));
        },
        py::arg("g"), py::arg("h"), py::arg("strategy") = "direct");

  m.def("feasible", [](const std::string& family, int d, int n) {
    const auto parsed = parse_feasibility_family(family);
    if (!parsed) throw std::invalid_argument("unknown family '" + family + "'");
    return to_string(feasible({*parsed, d, n}));
  }, py::arg("family"), py::arg("d"), py::arg("n"));

  m.def("compute_ell", [](const Graph& g, const std::vector<int>& jumps) {
    return ell_to_dict(compute_ell(g, JumpSet(jumps)));
  }, py::arg("graph"), py::arg("jumps"));
  m.def("build_main_lemma",
        [](const Graph& g, const std::vector<int>& jumps, int p) {
          auto result = build_main_lemma(g, JumpSet(jumps), p);
          return py::make_tuple(result.graph, certificate_to_dict(result.certificate));
        },
        py::arg("graph"), py::arg("jumps"), py::arg("p"));
  m.def("is_prime", &is_prime, py::arg("p"));

  m.def("d_family", [](int n, int t) {
    return py::make_tuple(n, d_family(n, t).jumps);
  }, py::arg("n"), py::arg("t"));
  m.def("cayley_family", [](int m, int t) {
    auto result = cayley_family(m, t);
    return py::make_tuple(result.graph, certificate_to_dict(result.certificate));
  }, py::arg("m"), py::arg("t"));

  m.def("caux_scan", [](int t_max) {
    py::list reports;
    for (const auto& report : caux_scan(t_max)) {
      py::dict d;
      d["t"] = report.t;
      d["p1_stripped_exponent"] = report.p1.stripped_exponent;
      d["p1_orders"] = report.p1.orders.orders;
      d["p2_stripped_exponent"] = report.p2.stripped_exponent;
      d["p2_orders"] = report.p2.orders.orders;
      d["violations"] = report.violations;
      reports.append(std::move(d));
    }
    return reports;
  }, py::arg("t_max"));

  m.def("conjecture_check", [](const std::string& variant, int t) {
    return certificate_to_dict(conjecture_check(ConjectureCase(parse_variant(variant), t)));
  }, py::arg("variant"), py::arg("t"));

  py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);
}
