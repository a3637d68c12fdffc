#include <algorithm>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "umbral/plane.hpp"
#include "umbral/sequences.hpp"
#include "umbral/su2q.hpp"

namespace py = pybind11;
using namespace umbral;

namespace {

using Strings = std::vector<std::string>;

std::vector<Strings> poly_list(const std::vector<Poly>& polys) {
  std::vector<Strings> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(coefficient_strings(p));
  return out;
}

py::array_t<Complex> to_numpy(const ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  py::array_t<Complex> a({n, n});
  auto v = a.mutable_unchecked<2>();
  for (py::ssize_t r = 0; r < n; ++r)
    for (py::ssize_t c = 0; c < n; ++c) v(r, c) = m(r, c);
  return a;
}

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["check"] = r.check;
  d["params"] = r.params;
  d["residuals"] = r.residuals;
  d["convention"] = r.convention;
  d["pass"] = r.pass;
  return d;
}

PsiSequence psi_from(const py::object& psi, std::size_t n_max) {
  if (py::isinstance<PsiSequence>(psi)) return psi.cast<PsiSequence>();
  return PsiSequence::builtin(psi.cast<std::string>(), std::max(n_max, PsiSequence::kDefaultMax));
}

std::optional<Complex> q_from(const py::object& q) {
  if (q.is_none()) return std::nullopt;
  return q.cast<Complex>();
}

}  // namespace

PYBIND11_MODULE(_umbral, m) {
  m.doc() = "Exact psi-umbral calculus over Q(q) and numeric U_q(su(2)) checks";

  py::class_<RationalFunction>(m, "RationalFunction")
      .def(py::init([](const std::string& s) { return parse_rational_function(s); }), py::arg("text"))
      .def(py::init<long>(), py::arg("value"))
      .def_static("q", &RationalFunction::q)
      .def("is_zero", &RationalFunction::is_zero)
      .def("inverse", &RationalFunction::inverse)
      .def("pow", &RationalFunction::pow)
      .def("eval", [](const RationalFunction& r, const std::string& at) {
        BigRational x(at);
        x.canonicalize();
        return r.eval(x).get_str();
      })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &RationalFunction::to_string)
      .def("__repr__", [](const RationalFunction& r) { return "RationalFunction('" + r.to_string() + "')"; });
  py::implicitly_convertible<std::string, RationalFunction>();
  py::implicitly_convertible<long, RationalFunction>();

  py::class_<PsiSequence>(m, "Psi")
      .def(py::init([](const std::string& name, std::size_t n_max) { return PsiSequence::builtin(name, n_max); }),
           py::arg("name"), py::arg("n_max") = PsiSequence::kDefaultMax)
      .def_static("custom", &PsiSequence::custom, py::arg("name"), py::arg("values"))
      .def_static("builtin_names", &PsiSequence::builtin_names)
      .def_property_readonly("name", &PsiSequence::name)
      .def_property_readonly("n_max", &PsiSequence::n_max)
      .def("value", &PsiSequence::value)
      .def("number", &PsiSequence::number)
      .def("factorial", &PsiSequence::factorial)
      .def("falling", &PsiSequence::falling)
      .def("binomial", &PsiSequence::binomial)
      .def("mutator_eigenvalue", &PsiSequence::mutator_eigenvalue)
      .def("__repr__", [](const PsiSequence& p) { return "Psi('" + p.name() + "', n_max=" + std::to_string(p.n_max()) + ")"; });

  py::class_<OperatorSeries>(m, "Series")
      .def(py::init<std::vector<RationalFunction>, std::size_t>(), py::arg("coeffs"), py::arg("order"))
      .def_static("identity", &OperatorSeries::identity)
      .def_static("derivative", &OperatorSeries::derivative)
      .def_property_readonly("order", &OperatorSeries::order)
      .def_property_readonly("coeffs", [](const OperatorSeries& s) {
        Strings out;
        for (const auto& c : s.coeffs()) out.push_back(c.to_string());
        return out;
      })
      .def("inverse", &OperatorSeries::inverse)
      .def("pow", &OperatorSeries::pow)
      .def("pincherle", &OperatorSeries::pincherle)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self);

  py::class_<DeltaOperator>(m, "Delta")
      .def(py::init<OperatorSeries>(), py::arg("series"))
      .def_property_readonly("series", &DeltaOperator::series)
      .def_property_readonly("order", &DeltaOperator::order)
      .def_static("partial", &delta::partial, py::arg("order"))
      .def_static("laguerre", &delta::laguerre, py::arg("order"))
      .def_static("partial_plus_square", &delta::partial_plus_square, py::arg("order"))
      .def_static("abel", &delta::abel, py::arg("psi"), py::arg("a"), py::arg("order"));

  m.def("s_factor", &s_factor, py::arg("delta"));
  m.def("exp_psi_square", &exp_psi_square, py::arg("psi"), py::arg("order"));
  m.def("laguerre_S", [](const std::string& alpha, std::size_t order) {
    BigRational a(alpha);
    a.canonicalize();
    return laguerre_order_S(a, order);
  }, py::arg("alpha"), py::arg("order"));

  m.def("basic_sequence", [](const py::object& psi, const DeltaOperator& q, std::size_t n, const std::string& method) {
    return poly_list(basic_sequence(psi_from(psi, n + 1), q, n, parse_basic_method(method)).polys);
  }, py::arg("psi"), py::arg("delta"), py::arg("n"), py::arg("method") = "solve");
  m.def("sheffer_sequence", [](const py::object& psi, const DeltaOperator& q, const OperatorSeries& s, std::size_t n) {
    return poly_list(sheffer_sequence(psi_from(psi, n + 1), q, s, n).polys);
  }, py::arg("psi"), py::arg("delta"), py::arg("S"), py::arg("n"));
  m.def("laguerre_closed", [](const py::object& psi, std::size_t n) {
    return coefficient_strings(laguerre_closed(psi_from(psi, n + 1), n));
  }, py::arg("psi"), py::arg("n"));
  m.def("q_laguerre_closed", [](std::size_t n) { return coefficient_strings(q_laguerre_closed(n)); }, py::arg("n"));

  m.def("b_sequence", [](const py::object& psi, std::size_t n) {
    Strings out;
    for (const auto& b : b_sequence(psi_from(psi, n + 1), n)) out.push_back(b.to_string());
    return out;
  }, py::arg("psi"), py::arg("n"));
  m.def("binomial_nogo", [](const py::object& psi, std::size_t n) {
    const auto r = binomial_nogo(psi_from(psi, n + 1), n);
    py::dict d;
    d["holds"] = r.holds();
    d["lhs"] = coefficient_table(r.lhs);
    d["rhs"] = coefficient_table(r.rhs);
    d["residual"] = coefficient_table(r.residual);
    return d;
  }, py::arg("psi"), py::arg("n"));
  m.def("first_nogo_witness", [](const py::object& psi, std::size_t limit) {
    return first_nogo_witness(psi_from(psi, limit + 1), limit);
  }, py::arg("psi"), py::arg("limit"));

  m.def("q_bracket", &q_bracket, py::arg("x"), py::arg("q"));
  m.def("su2", [](const std::string& j, const py::object& q) {
    const auto rep = su2_build(Spin::parse(j), q_from(q));
    py::dict d;
    d["J3"] = to_numpy(rep.j3);
    d["Jplus"] = to_numpy(rep.jplus);
    d["Jminus"] = to_numpy(rep.jminus);
    return d;
  }, py::arg("j"), py::arg("q") = py::none());
  m.def("su2_check", [](const std::string& j, const py::object& q, double tolerance) {
    return report_dict(su2_report(su2_build(Spin::parse(j), q_from(q)), tolerance));
  }, py::arg("j"), py::arg("q") = py::none(), py::arg("tolerance") = 1e-10);
  m.def("polar_check", [](const std::string& j, const py::object& q, double tolerance) {
    const auto rep = su2_build(Spin::parse(j), q_from(q));
    return report_dict(polar_report(rep, polar_decompose(rep), tolerance));
  }, py::arg("j"), py::arg("q") = py::none(), py::arg("tolerance") = 1e-10);
  m.def("weyl_check", [](std::size_t n, double tolerance) {
    const auto w = weyl_build(n);
    return report_dict(weyl_report(w, weyl_check(w), tolerance));
  }, py::arg("n"), py::arg("tolerance") = 1e-10);
}
