#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dihedral/dihedral_angles.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/identity_lab.hpp"
#include "dihedral/quadrature.hpp"
#include "dihedral/series_eval.hpp"
#include "dihedral/special_fn.hpp"

namespace py = pybind11;
using namespace dihedral;

namespace {

Truncation make_trunc(double tol, std::size_t max_terms) {
  Truncation t{tol, max_terms};
  t.validate();
  return t;
}

}  // namespace

PYBIND11_MODULE(_dihedral, m) {
  m.doc() = "Neumann-type Bessel series over dihedral angles";

  auto base = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<TruncationError>(m, "TruncationError", PyExc_ArithmeticError);
  py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);
  py::register_exception<CombinatorialSizeError>(m, "CombinatorialSizeError", base.ptr());

  py::enum_<Route>(m, "Route")
      .value("direct", Route::direct)
      .value("closed_n1", Route::closed_n1)
      .value("closed_n2", Route::closed_n2)
      .value("integral_n4", Route::integral_n4)
      .value("horn_phi2", Route::horn_phi2);

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("route", &EvalResult::route)
      .def_property_readonly("terms_used", [](const EvalResult& r) { return r.report.terms_used; })
      .def_property_readonly("tail_bound", [](const EvalResult& r) { return r.report.tail_bound; })
      .def("__repr__", [](const EvalResult& r) {
        return "EvalResult(value=" + py::repr(py::float_(r.value)).cast<std::string>() + ", route=" +
               std::string(route_name(r.route)) + ")";
      });

  m.def(
      "evaluate",
      [](int n, double k, double R, double xi, Route route, double tol, std::size_t max_terms) {
        return evaluate(route, SeriesParams{n, k, R, xi}, make_trunc(tol, max_terms));
      },
      py::arg("n"), py::arg("k"), py::arg("R"), py::arg("xi"), py::arg("route") = Route::direct,
      py::arg("tol") = 1e-15, py::arg("max_terms") = 10'000, "F_{n,k}(R, xi) by the chosen route");
  m.def("route_applies", &route_applies, py::arg("route"), py::arg("n"));

  m.def("log_gamma", &log_gamma, py::arg("x"));
  m.def("pochhammer", &pochhammer, py::arg("x"), py::arg("m"));
  m.def("gegenbauer", &gegenbauer, py::arg("j"), py::arg("k"), py::arg("x"));
  m.def("chebyshev_t", &chebyshev_t, py::arg("n"), py::arg("x"));
  m.def("reverse_chebyshev_coeffs", [](int n) { return reverse_chebyshev_coeffs(n).coeffs; }, py::arg("n"));
  m.def(
      "bessel_i", [](double nu, double x) { return bessel_i(BesselOrder(nu), x); }, py::arg("nu"), py::arg("x"));
  m.def(
      "normalized_bessel_i", [](double alpha, double u) { return normalized_bessel_i(alpha, u); }, py::arg("alpha"),
      py::arg("u"));
  m.def(
      "power_neumann_sum", [](double nu, double R) { return power_neumann_sum(nu, R).value; }, py::arg("nu"),
      py::arg("R"));

  m.def(
      "angle_cosines", [](int n, double xi) { return make_angle_set(n, xi).cosines; }, py::arg("n"), py::arg("xi"));
  m.def(
      "elementary_symmetric", [](const std::vector<double>& v) { return elementary_symmetric(v); },
      py::arg("values"));
  m.def("lemma1_predicted_e", &lemma1_predicted_e, py::arg("n"), py::arg("xi"), py::arg("m"));

  m.def(
      "horn_phi2",
      [](const std::vector<double>& betas, double gamma, const std::vector<double>& xs, double tol) {
        return horn_phi2(betas, gamma, xs, make_trunc(tol, 10'000));
      },
      py::arg("betas"), py::arg("gamma"), py::arg("xs"), py::arg("tol") = 1e-15);
  m.def(
      "ir1_reduce", [](int j, double k, double x) { return ir1_reduce(j, k, x); }, py::arg("j"), py::arg("k"),
      py::arg("x"));
  m.def(
      "integrate_jacobi_weight",
      [](const std::function<double(double)>& f, double k, int points, double tol) {
        return integrate_jacobi_weight(f, k, QuadratureSpec{QuadratureMethod::gauss_jacobi, points, tol});
      },
      py::arg("f"), py::arg("k"), py::arg("points") = 32, py::arg("tol") = 1e-13,
      "Integral of f(z) (1 - z^2)^(k - 1) over [-1, 1]");
  m.def("jacobi_weight_mass", &jacobi_weight_mass, py::arg("k"));

  m.def("idgeg_lhs", &idgeg_lhs, py::arg("n"), py::arg("k"), py::arg("xi"), py::arg("N"));
  m.def("idgeg_rhs", &idgeg_rhs, py::arg("n"), py::arg("k"), py::arg("xi"), py::arg("N"));
  m.def(
      "invert_corollary", [](int q, double k, int M) { return invert_corollary(q, k, M).a; }, py::arg("q"),
      py::arg("k"), py::arg("M"), "Coefficients a_0..a_M, rounded to double");
  m.def(
      "corollary_reconstruct",
      [](int q, double k, int M, double xi) { return corollary_reconstruct(invert_corollary(q, k, M), xi); },
      py::arg("q"), py::arg("k"), py::arg("M"), py::arg("xi"));
  m.def("n2_inverse_expansion_check", &n2_inverse_expansion_check, py::arg("k"), py::arg("M"), py::arg("x"));
  m.def(
      "dilcher_representation", [](int j, int k, double xi) { return dilcher_representation(j, k, xi); },
      py::arg("j"), py::arg("k"), py::arg("xi"));
}
