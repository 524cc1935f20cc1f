#include "dunkl/appell.hpp"
#include "dunkl/dunkl.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dunkl;

// Rationals travel as fractions.Fraction; int and "p/q" strings are accepted on input.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = parse_rational(src.cast<std::string>());
        return true;
      }
      if (py::isinstance<py::bool_>(src)) return false;
      if (py::isinstance<py::int_>(src)) {
        value = Rational(Integer(py::str(src).cast<std::string>()));
        return true;
      }
      if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator") && !py::isinstance<py::float_>(src)) {
        const Integer num(py::str(src.attr("numerator")).cast<std::string>());
        const Integer den(py::str(src.attr("denominator")).cast<std::string>());
        if (den == 0) return false;
        value = Rational(num, den);
        value.canonicalize();
        return true;
      }
    } catch (const std::exception&) {
      return false;
    }
    return false;
  }

  static handle cast(const Rational& q, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::int_ num(py::reinterpret_steal<py::object>(PyLong_FromString(q.get_num().get_str().c_str(), nullptr, 10)));
    py::int_ den(py::reinterpret_steal<py::object>(PyLong_FromString(q.get_den().get_str().c_str(), nullptr, 10)));
    return fraction(num, den).release();
  }
};
}  // namespace pybind11::detail

namespace {

MultiIndex to_index(const std::vector<unsigned>& v) { return MultiIndex(v); }

DunklContext make_context(const std::string& group, std::vector<Rational> k) {
  RootSystem rs = parse_group_label(group);
  const std::size_t orbits = root_orbits(rs).size();
  if (k.size() == 1 && orbits > 1) k.assign(orbits, k.front());
  Multiplicity m(rs, k);
  return DunklContext(std::move(rs), std::move(m));
}

py::dict kernel_dict(const KernelValue& v, bool complex) {
  py::dict d;
  d["value"] = v.value;
  if (complex) d["imag"] = v.imag;
  d["error_bound"] = v.error_bound;
  d["degree"] = v.degree;
  return d;
}

NumericEvalConfig numeric(double tol, bool relative, unsigned max_degree) {
  NumericEvalConfig cfg;
  cfg.tolerance = tol;
  cfg.relative = relative;
  cfg.max_degree = max_degree;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Dunkl operators, Appell systems and k-Gaussian integration";

  py::register_exception<NotDivisibleError>(m, "NotDivisibleError", PyExc_ArithmeticError);
  py::register_exception<UnsupportedFamilyError>(m, "UnsupportedFamilyError", PyExc_ValueError);
  py::register_exception<InvalidMultiplicityError>(m, "InvalidMultiplicityError", PyExc_ValueError);
  py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, std::size_t rank) { return parse_polynomial(text, rank); }),
           py::arg("text"), py::arg("rank"))
      .def_static("monomial", [](const std::vector<unsigned>& nu, const Rational& c) {
        return Polynomial::monomial(to_index(nu), c);
      }, py::arg("nu"), py::arg("coefficient") = Rational(1))
      .def_property_readonly("rank", &Polynomial::rank)
      .def_property_readonly("degree", &Polynomial::degree)
      .def("terms", [](const Polynomial& p) {
        py::dict d;
        for (const auto& [nu, c] : p.terms()) d[py::tuple(py::cast(nu.exponents()))] = py::cast(c);
        return d;
      })
      .def("__call__", [](const Polynomial& p, const std::vector<Rational>& x) { return evaluate(p, x); })
      .def("latex", [](const Polynomial& p) { return to_latex(p); })
      .def("__str__", [](const Polynomial& p) { return to_string(p); })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + to_string(p) + "', " + std::to_string(p.rank()) + ")"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def("__mul__", [](const Polynomial& p, const Rational& c) { return p * c; })
      .def("__rmul__", [](const Polynomial& p, const Rational& c) { return p * c; })
      .def("__neg__", [](const Polynomial& p) { return -p; })
      .def(py::self == py::self);

  py::class_<DunklContext>(m, "Context")
      .def(py::init(&make_context), py::arg("group"), py::arg("k"),
           "Root system label such as 'B2' and one multiplicity per orbit (a single value applies to all).")
      .def_property_readonly("rank", &DunklContext::rank)
      .def_property_readonly("label", [](const DunklContext& c) { return c.root_system().label; })
      .def_property_readonly("k", [](const DunklContext& c) { return c.multiplicity().values(); })
      .def_property_readonly("gamma", [](const DunklContext& c) { return gamma_k(c.root_system(), c.multiplicity()); })
      .def_property_readonly("roots", [](const DunklContext& c) { return c.root_system().roots; })
      .def_property_readonly("positive_roots", [](const DunklContext& c) { return c.root_system().positive_roots; })
      .def_property_readonly("orbits", [](const DunklContext& c) {
        py::list out;
        for (const auto& o : c.multiplicity().orbits()) out.append(py::cast(o.roots));
        return out;
      })
      .def_property_readonly("group_order", [](const DunklContext& c) { return generate_group(c.root_system()).matrices.size(); });

  m.def("dunkl", &dunkl_apply, py::arg("ctx"), py::arg("axis"), py::arg("p"), "T_axis p, axis 0-based");
  m.def("laplacian", &laplacian_apply, py::arg("ctx"), py::arg("p"));
  m.def("heat", &heat_apply, py::arg("ctx"), py::arg("t"), py::arg("p"), "exp(t Delta_k) p");
  m.def("moment", [](const DunklContext& c, const std::vector<unsigned>& nu) { return moment_function(c, to_index(nu)); },
        py::arg("ctx"), py::arg("nu"));
  m.def("apply_v", &apply_v, py::arg("ctx"), py::arg("p"));
  m.def("apply_v_inverse", &apply_v_inverse, py::arg("ctx"), py::arg("p"));
  m.def("taylor_coefficients", [](const DunklContext& c, const Polynomial& p) {
    py::dict d;
    for (const auto& [nu, v] : taylor_coefficients(c, p)) d[py::tuple(py::cast(nu.exponents()))] = py::cast(v);
    return d;
  }, py::arg("ctx"), py::arg("p"));
  m.def("appell_character", [](const DunklContext& c, const std::vector<unsigned>& nu, const Rational& t) {
    return appell_character(c, to_index(nu), t);
  }, py::arg("ctx"), py::arg("nu"), py::arg("t"));
  m.def("appell_cocharacter", [](const DunklContext& c, const std::vector<unsigned>& nu, const Rational& t) {
    return appell_cocharacter(c, to_index(nu), t);
  }, py::arg("ctx"), py::arg("nu"), py::arg("t"));
  m.def("rodriguez_cocharacter", [](const DunklContext& c, const std::vector<unsigned>& nu, const Rational& t) {
    return rodriguez_cocharacter(c, to_index(nu), t);
  }, py::arg("ctx"), py::arg("nu"), py::arg("t"));
  m.def("gaussian_integrate", [](const DunklContext& c, const Polynomial& p, const Rational& t,
                                 const std::vector<Rational>& center) {
    return gaussian_integrate(c, p, GaussianSpec{t, center});
  }, py::arg("ctx"), py::arg("p"), py::arg("t"), py::arg("center") = std::vector<Rational>{});
  m.def("pairing", &pairing, py::arg("ctx"), py::arg("p"), py::arg("q"), "[p, q]_k = (p(T) q)(0)");
  m.def("hermite_basis", &hermite_basis, py::arg("ctx"), py::arg("max_degree"), py::arg("t"));

  m.def("suite_names", &suite_names);
  m.def("verify", [](const DunklContext& c, const std::string& suite, unsigned max_degree,
                     const std::vector<Rational>& ts, bool inject_fault) {
    VerifyConfig cfg;
    cfg.max_degree = max_degree;
    if (!ts.empty()) cfg.ts = ts;
    if (inject_fault) cfg.a_lambda_override = perturbed_a_lambda();
    const SuiteReport r = [&] {
      py::gil_scoped_release release;
      return run_suite(c, suite, cfg);
    }();
    py::dict d;
    d["suite"] = r.suite;
    d["identity"] = r.identity;
    d["passed"] = r.passed;
    d["skipped"] = r.skipped;
    d["checks"] = r.checks;
    d["failures"] = r.failure_count;
    d["counterexamples"] = r.counterexamples;
    d["notes"] = r.notes;
    return d;
  }, py::arg("ctx"), py::arg("suite"), py::arg("max_degree") = 4, py::arg("ts") = std::vector<Rational>{},
     py::arg("inject_fault") = false);

  m.def("kernel", [](const DunklContext& c, const std::vector<double>& x, const std::vector<double>& y, double tol,
                     bool relative, bool imaginary, unsigned max_degree) {
    const NumericEvalConfig cfg = numeric(tol, relative, max_degree);
    return kernel_dict(imaginary ? kernel_eval_imaginary(c, x, y, cfg) : kernel_eval(c, x, y, cfg), imaginary);
  }, py::arg("ctx"), py::arg("x"), py::arg("y"), py::arg("tol") = 1e-12, py::arg("relative") = true,
     py::arg("imaginary") = false, py::arg("max_degree") = 200);
  m.def("heat_kernel", [](const DunklContext& c, const std::vector<double>& x, const std::vector<double>& y, double t,
                          double tol) {
    return kernel_dict(heat_kernel_eval(c, x, y, t, numeric(tol, true, 200)), false);
  }, py::arg("ctx"), py::arg("x"), py::arg("y"), py::arg("t"), py::arg("tol") = 1e-12);
  m.def("theta", [](const DunklContext& c, double t, const std::vector<double>& x, const std::vector<double>& y,
                    double tol) {
    return kernel_dict(density_theta(c, t, x, y, numeric(tol, true, 200)), false);
  }, py::arg("ctx"), py::arg("t"), py::arg("x"), py::arg("y"), py::arg("tol") = 1e-12);
  m.def("c_k", [](const DunklContext& c, const std::string& mode) {
    NumericEvalConfig cfg;
    if (mode == "closed") cfg.c_k_mode = CkMode::closed_form;
    else if (mode == "quadrature") cfg.c_k_mode = CkMode::quadrature;
    else if (mode != "auto") throw py::value_error("mode must be auto, closed or quadrature");
    return c_k_constant(c, cfg);
  }, py::arg("ctx"), py::arg("mode") = "auto");
  m.def("kernel_z2_closed", &kernel_z2_closed, py::arg("k"), py::arg("z"), py::arg("w"));
}
