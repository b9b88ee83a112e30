#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hecke_lab/cache.hpp"
#include "hecke_lab/cli.hpp"
#include "hecke_lab/lab.hpp"

namespace py = pybind11;
using namespace hecke_lab;

namespace {

Permutation to_perm(const py::object& o) {
  if (py::isinstance<py::str>(o)) return Permutation::parse(o.cast<std::string>());
  const auto v = o.cast<std::vector<int>>();
  return Permutation(std::span<const int>(v));
}

HessenbergFunction to_hessenberg(const py::object& o) {
  if (py::isinstance<py::str>(o)) return HessenbergFunction::parse(o.cast<std::string>());
  return HessenbergFunction(o.cast<std::vector<int>>());
}

Partition to_partition(const py::object& o) {
  if (py::isinstance<py::str>(o)) return Partition::parse(o.cast<std::string>());
  return Partition(o.cast<std::vector<int>>());
}

py::tuple perm_tuple(const Permutation& w) {
  py::tuple t(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) t[static_cast<std::size_t>(i - 1)] = w(i);
  return t;
}

py::object big_to_py(const BigInt& c) { return py::int_(py::str(c.get_str())); }

// Exponents are in q; a half-integral exponent comes back as a float.
py::dict laurent_to_py(const LaurentQ& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 == 0)
      d[py::int_(e / 2)] = big_to_py(c);
    else
      d[py::float_(e / 2.0)] = big_to_py(c);
  }
  return d;
}

py::object rational_laurent_to_py(const RationalLaurent& p) {
  if (auto integral = to_integral(p)) return laurent_to_py(*integral);
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::dict d;
  for (const auto& [e, c] : p.terms()) {
    py::object v = fraction(big_to_py(c.get_num()), big_to_py(c.get_den()));
    if (e % 2 == 0)
      d[py::int_(e / 2)] = v;
    else
      d[py::float_(e / 2.0)] = v;
  }
  return d;
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Kazhdan-Lusztig polynomials, Hecke algebra characters and chromatic quasisymmetric functions";

  py::register_exception<Error>(mod, "HeckeLabError", PyExc_ValueError);

  py::class_<SymmetricFunction>(mod, "SymmetricFunction")
      .def_property_readonly("degree", &SymmetricFunction::degree)
      .def_property_readonly("basis", [](const SymmetricFunction& f) { return basis_name(f.basis()); })
      .def("to", [](const SymmetricFunction& f, const std::string& b) { return f.to(parse_basis(b)); }, py::arg("basis"))
      .def("coefficients",
           [](const SymmetricFunction& f) {
             py::dict d;
             const auto& parts = partitions(f.degree());
             for (std::size_t k = 0; k < parts.size(); ++k) {
               const auto& c = f.coefficients()[k];
               if (c.is_zero()) continue;
               d[py::tuple(py::cast(parts[k].parts()))] = rational_laurent_to_py(c);
             }
             return d;
           },
           "Non-zero coefficients keyed by partition; each value maps q-exponents to coefficients.")
      .def("at_q_one", &SymmetricFunction::at_q_one)
      .def("is_zero", &SymmetricFunction::is_zero)
      .def("latex", &SymmetricFunction::to_latex)
      .def("to_json", [](const SymmetricFunction& f) { return json_to_py(to_json(f)); })
      .def("__eq__", [](const SymmetricFunction& a, const SymmetricFunction& b) { return a == b; })
      .def("__add__", [](const SymmetricFunction& a, const SymmetricFunction& b) { return a + b; })
      .def("__sub__", [](const SymmetricFunction& a, const SymmetricFunction& b) { return a - b; })
      .def("__str__", &SymmetricFunction::to_string)
      .def("__repr__", [](const SymmetricFunction& f) { return "SymmetricFunction(" + f.to_string() + ")"; });

  mod.def("length", [](const py::object& w) { return to_perm(w).length(); }, py::arg("w"));
  mod.def("bruhat_leq", [](const py::object& z, const py::object& w) { return bruhat_leq(to_perm(z), to_perm(w)); },
          py::arg("z"), py::arg("w"));
  mod.def("is_smooth", [](const py::object& w) { return is_smooth(to_perm(w)); }, py::arg("w"));
  mod.def("is_codominant", [](const py::object& w) { return is_codominant(to_perm(w)); }, py::arg("w"));
  mod.def("hessenberg_of_smooth", [](const py::object& w) { return hessenberg_of_smooth(to_perm(w)).values(); },
          py::arg("w"));
  mod.def("codominant", [](const py::object& m) { return perm_tuple(codominant_of_hessenberg(to_hessenberg(m))); },
          py::arg("m"));
  mod.def("hessenberg_functions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& m : enumerate_hessenberg(n)) out.push_back(m.values());
    return out;
  }, py::arg("n"));

  mod.def("kl_polynomial", [](const py::object& z, const py::object& w) {
    return laurent_to_py(kl_polynomial(to_perm(z), to_perm(w)));
  }, py::arg("z"), py::arg("w"), "P_{z,w} as {exponent: coefficient}.");
  mod.def("kl_row", [](const py::object& w) {
    const Permutation p = to_perm(w);
    py::gil_scoped_release release;
    auto table = kl_table_cached(p);
    py::gil_scoped_acquire acquire;
    py::dict d;
    for (const auto& [z, poly] : table->row(p)) d[perm_tuple(z)] = laurent_to_py(poly->to_laurent());
    return d;
  }, py::arg("w"), "All P_{z,w} with z <= w, keyed by z.");
  mod.def("mu", [](const py::object& z, const py::object& w) { return mu(to_perm(z), to_perm(w)); },
          py::arg("z"), py::arg("w"));
  mod.def("cprime", [](const py::object& w) {
    py::dict d;
    const HeckeElement c = cprime(to_perm(w));
    for (const auto& [z, coeff] : c.terms()) d[perm_tuple(z)] = laurent_to_py(coeff);
    return d;
  }, py::arg("w"), "q^{l(w)/2} C'_w in the T basis, keyed by z.");
  mod.def("chi", [](const py::object& lambda, const py::object& w) {
    return laurent_to_py(chi(to_partition(lambda), to_perm(w)));
  }, py::arg("lam"), py::arg("w"), "The irreducible character chi^lambda(T_w).");
  mod.def("ch", [](const py::object& w, const std::string& basis) {
    const Permutation p = to_perm(w);
    const Basis b = parse_basis(basis);
    py::gil_scoped_release release;
    return ch_cprime(p).to(b);
  }, py::arg("w"), py::arg("basis") = "s", "Frobenius character of q^{l(w)/2} C'_w.");
  mod.def("csf", [](const py::object& m, const std::string& basis) {
    return csf(to_hessenberg(m)).to(parse_basis(basis));
  }, py::arg("m"), py::arg("basis") = "m", "Chromatic quasisymmetric function of the indifference graph of m.");
  mod.def("omega", &omega, py::arg("f"));

  mod.def("smooth_reduce", [](const py::object& w) { return perm_tuple(smooth_reduce(to_perm(w))); }, py::arg("w"));
  mod.def("moment_graph", [](const py::object& w) { return moment_graph(to_perm(w)).transpositions; }, py::arg("w"));
  mod.def("modular_relation", [](const py::object& w, int s) {
    const ModularRelation r = modular_relation(to_perm(w), s);
    py::dict d;
    d["case"] = r.kind == ModularCase::Smooth ? "smooth" : "singular";
    d["ws"] = perm_tuple(r.ws);
    d["z"] = r.z ? py::object(perm_tuple(*r.z)) : py::object(py::none());
    d["identity"] = r.identity();
    d["verified"] = r.verified;
    return d;
  }, py::arg("w"), py::arg("s"));
  mod.def("counterexample_search", [](const py::object& m, bool general, int threads) {
    const HessenbergFunction m1 = to_hessenberg(m);
    CounterexampleResult r;
    {
      py::gil_scoped_release release;
      const CsfBatch batch = CsfBatch::compute(m1.size(), threads);
      r = counterexample_search(m1, batch, general);
    }
    py::list out;
    for (const auto& s : r.solutions) out.append(py::make_tuple(s.m0.values(), s.m2.values(), s.a));
    return out;
  }, py::arg("m"), py::arg("general") = false, py::arg("threads") = 1,
     "Solutions (m0, m2, a) of (1 + q) csf(m1) = csf(m2) + q^a csf(m0); empty when there are none.");
  mod.def("decompose", [](const py::object& w) -> py::object {
    const Permutation p = to_perm(w);
    Decomposition d;
    {
      py::gil_scoped_release release;
      d = decompose_codominant(p);
    }
    if (!d.found) return py::none();
    py::dict out;
    for (const auto& t : d.terms) out[perm_tuple(t.w)] = laurent_to_py(t.coeff);
    return out;
  }, py::arg("w"), "ch(C'_w) as an N[q]-combination of codominant characters, or None when none was found.");
  mod.def("check_names", &check_names);
  mod.def("run_check", [](const std::string& name, int n) {
    CheckReport r;
    {
      py::gil_scoped_release release;
      r = run_check(name, n);
    }
    return json_to_py(r.to_json());
  }, py::arg("name"), py::arg("n"));
  mod.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line with the given arguments; returns (exit_code, stdout, stderr).");
}
