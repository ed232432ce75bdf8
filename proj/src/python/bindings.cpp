#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cayley/json_io.hpp"
#include "cayley/parse.hpp"
#include "cayley/splitting_field.hpp"
#include "cayley/verify.hpp"

namespace py = pybind11;
using namespace cayley;

namespace {

py::int_ to_py_int(const BigInt& v) {
  const std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

BigInt to_bigint(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

py::list coeffs_out(const std::vector<BigInt>& cs) {
  py::list out;
  for (const BigInt& c : cs) out.append(to_py_int(c));
  return out;
}

py::tuple element_out(const GroupElement& x) {
  py::tuple t(x.coords.size());
  for (size_t i = 0; i < x.coords.size(); ++i) t[i] = x.coords[i];
  return t;
}

GroupElement element_in(const AbelianGroup& G, const std::vector<int64_t>& coords) {
  return element(G, coords);
}

py::list element_set_out(const ElementSet& s) {
  py::list out;
  for (const GroupElement& x : s) out.append(element_out(x));
  return out;
}

std::vector<GroupElement> element_set_in(const AbelianGroup& G,
                                         const std::vector<std::vector<int64_t>>& xs) {
  std::vector<GroupElement> out;
  out.reserve(xs.size());
  for (const auto& c : xs) out.push_back(element(G, c));
  return out;
}

py::dict stabilizer_out(const StabilizerSubgroup& s) {
  py::dict d;
  d["modulus"] = s.modulus;
  d["elements"] = s.elements;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hermitian spectra, splitting fields and algebraic degrees of mixed Cayley "
            "graphs over finite abelian groups";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

  py::class_<AbelianGroup>(m, "Group")
      .def(py::init([](const std::vector<int64_t>& moduli) { return make_group(moduli); }),
           py::arg("moduli"))
      .def_readonly("moduli", &AbelianGroup::moduli)
      .def_readonly("order", &AbelianGroup::order)
      .def_readonly("exponent", &AbelianGroup::exponent)
      .def("elements",
           [](const AbelianGroup& G) {
             py::list out;
             for (const GroupElement& g : elements(G)) out.append(element_out(g));
             return out;
           })
      .def("__eq__", [](const AbelianGroup& a, const AbelianGroup& b) { return a == b; })
      .def("__repr__", [](const AbelianGroup& G) { return "Group(" + format_group_spec(G) + ")"; });

  py::class_<CycInt>(m, "CycInt")
      .def(py::init([](int64_t modulus, const std::vector<py::int_>& coeffs) {
             CycInt v = cyc_zero(modulus);
             if (coeffs.size() != v.coeffs.size()) {
               throw validation_error("invalid-element",
                                      "coefficient vector must have length phi(m)");
             }
             for (size_t i = 0; i < coeffs.size(); ++i) v.coeffs[i] = to_bigint(coeffs[i]);
             return v;
           }),
           py::arg("modulus"), py::arg("coeffs"))
      .def_readonly("modulus", &CycInt::modulus)
      .def_property_readonly("coeffs", [](const CycInt& v) { return coeffs_out(v.coeffs); })
      .def("embed", [](const CycInt& v) { return complex_embed(v); })
      .def("is_rational", [](const CycInt& v) { return is_rational(v); })
      .def("__int__", [](const CycInt& v) { return to_py_int(as_integer(v)); })
      .def("__add__", &cyc_add)
      .def("__sub__", &cyc_sub)
      .def("__neg__", &cyc_neg)
      .def("__mul__", &cyc_mul)
      .def("__eq__", [](const CycInt& a, const CycInt& b) { return a == b; })
      .def("__repr__", [](const CycInt& v) {
        return "CycInt(zeta_" + std::to_string(v.modulus) + ": " + to_string(v) + ")";
      });

  py::class_<ConnectionSet>(m, "ConnectionSet")
      .def(py::init([](const AbelianGroup& G, const std::vector<std::vector<int64_t>>& A,
                       const std::vector<std::vector<int64_t>>& B) {
             return make_connection_set(G, element_set_in(G, A), element_set_in(G, B));
           }),
           py::arg("group"), py::arg("A") = std::vector<std::vector<int64_t>>{},
           py::arg("B") = std::vector<std::vector<int64_t>>{})
      .def_readonly("group", &ConnectionSet::group)
      .def_property_readonly("A", [](const ConnectionSet& cs) { return element_set_out(cs.A); })
      .def_property_readonly("B", [](const ConnectionSet& cs) { return element_set_out(cs.B); })
      .def("to_json", [](const ConnectionSet& cs) { return to_json(cs).dump(); })
      .def("__eq__", [](const ConnectionSet& a, const ConnectionSet& b) { return a == b; })
      .def("__repr__", [](const ConnectionSet& cs) {
        return "ConnectionSet(" + format_group_spec(cs.group) + ", A={" +
               format_element_list(cs.group, cs.A) + "}, B={" +
               format_element_list(cs.group, cs.B) + "})";
      });

  m.def("split_connection_set",
        [](const AbelianGroup& G, const std::vector<std::vector<int64_t>>& S) {
          return split_connection_set(G, element_set_in(G, S));
        },
        py::arg("group"), py::arg("S"));

  m.def("connection_set_from_json",
        [](const std::string& s) { return connection_set_from_json(Json::parse(s)); });

  // group-theoretic helpers
  m.def("units", [](int64_t mod) { return units(mod).elements; }, py::arg("m"));
  m.def("euler_phi", &euler_phi, py::arg("m"));
  m.def("order_of",
        [](const AbelianGroup& G, const std::vector<int64_t>& g) {
          return order_of(G, element_in(G, g));
        },
        py::arg("group"), py::arg("g"));
  m.def("atom",
        [](const AbelianGroup& G, const std::vector<int64_t>& g) {
          return element_set_out(atom(G, element_in(G, g)));
        },
        py::arg("group"), py::arg("g"));
  m.def("atom_mod4",
        [](const AbelianGroup& G, const std::vector<int64_t>& g) {
          return element_set_out(atom_mod4(G, element_in(G, g)));
        },
        py::arg("group"), py::arg("g"));
  m.def("g4_subset",
        [](const AbelianGroup& G) { return element_set_out(g4_subset(G)); }, py::arg("group"));
  m.def("orbit",
        [](const AbelianGroup& G, int64_t modulus, const std::vector<int64_t>& g) {
          return element_set_out(orbit(G, units(modulus), element_in(G, g)));
        },
        py::arg("group"), py::arg("modulus"), py::arg("g"));

  // cyclotomic ring
  m.def("cyclotomic_polynomial",
        [](int64_t mod) { return coeffs_out(cyclotomic_polynomial(mod).coeffs); }, py::arg("m"));
  m.def("root_power", &root_power, py::arg("m"), py::arg("j"));
  m.def("galois_apply", &galois_apply, py::arg("k"), py::arg("a"));

  // spectra
  m.def("eigenvalue",
        [](const ConnectionSet& cs, const std::vector<int64_t>& g) {
          return eigenvalue(cs, element_in(cs.group, g));
        },
        py::arg("cs"), py::arg("g"));
  m.def("spectrum",
        [](const ConnectionSet& cs) {
          py::list out;
          for (const SpectrumEntry& e : full_spectrum(cs).entries) {
            out.append(py::make_tuple(element_out(e.g), e.gamma, complex_embed(e.gamma).real()));
          }
          return out;
        },
        py::arg("cs"), "list of (g, gamma, float approximation) per group element");
  m.def("char_poly",
        [](const ConnectionSet& cs) { return coeffs_out(char_poly(cs)); }, py::arg("cs"));
  m.def("numeric_spectrum", &numeric_spectrum, py::arg("cs"), py::arg("tol") = 1e-8);

  // splitting fields and integrality
  m.def("combinatorial_stabilizer",
        [](const ConnectionSet& cs) { return stabilizer_out(combinatorial_stabilizer(cs)); },
        py::arg("cs"));
  m.def("galois_fixing_stabilizer",
        [](const ConnectionSet& cs) {
          return stabilizer_out(galois_fixing_stabilizer(full_spectrum(cs)));
        },
        py::arg("cs"));
  m.def("undirected_stabilizer",
        [](const ConnectionSet& cs) { return stabilizer_out(undirected_stabilizer(cs)); },
        py::arg("cs"));
  m.def("splitting_field_report",
        [](const ConnectionSet& cs) {
          const SplittingFieldReport rep = splitting_field_report(cs);
          py::dict d;
          d["modulus"] = rep.modulus;
          d["stabilizer"] = rep.stabilizer.elements;
          d["degree"] = rep.degree;
          d["coset_reps"] = rep.coset_reps;
          if (rep.generator) {
            py::dict g;
            g["theta"] = rep.generator->theta;
            g["min_poly"] = coeffs_out(rep.generator->min_poly);
            d["generator"] = g;
          } else {
            d["generator"] = py::none();
          }
          return d;
        },
        py::arg("cs"));
  m.def("algebraic_degree",
        [](const ConnectionSet& cs) { return splitting_field_report(cs).degree; }, py::arg("cs"));
  m.def("lift_unit", &lift_unit, py::arg("n"), py::arg("m"), py::arg("h_prime"));
  m.def("is_integral", [](const ConnectionSet& cs) { return is_integral_exact(cs); },
        py::arg("cs"));
  m.def("is_integral_characterized", &is_integral_characterized, py::arg("cs"));
  m.def("enumerate_integral_sets", &enumerate_integral_sets, py::arg("group"),
        py::arg("cap") = 20);

  m.def("run_verify",
        [](int64_t max_order, uint64_t seed, int jobs, double tol) {
          VerifyOptions opts;
          opts.max_order = max_order;
          opts.seed = seed;
          opts.jobs = jobs;
          opts.tol = tol;
          const VerificationSummary s = run_verify(opts);
          py::list failures;
          for (const VerifyFailure& f : s.failures) {
            py::dict d;
            d["check"] = f.check;
            d["where"] = f.where;
            d["detail"] = f.detail;
            failures.append(d);
          }
          py::dict d;
          d["groups"] = s.groups;
          d["connection_sets"] = s.connection_sets;
          d["checks"] = s.checks;
          d["failures"] = failures;
          return d;
        },
        py::arg("max_order") = 8, py::arg("seed") = 0, py::arg("jobs") = 1,
        py::arg("tol") = 1e-8);

  m.attr("__version__") = "1.0.0";
}
