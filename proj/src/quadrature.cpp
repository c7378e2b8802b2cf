#include "dihedral/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "dihedral/errors.hpp"
#include "dihedral/special_fn.hpp"
#include "wide_real.hpp"

namespace dihedral {

namespace {

constexpr int kMaxGaussPoints = 1024;
constexpr unsigned kMaxAdaptiveDepth = 30;

using detail::wide_real;

// Off-diagonal entries squared of the monic recurrence for exponents (a, a).
wide_real recurrence_beta(int j, wide_real a) {
  if (j == 1) return 1 / (2 * a + 3);
  const wide_real s = 2 * j + 2 * a;
  return j * (j + 2 * a) / ((s + 1) * (s - 1));
}

// Orthonormal recurrence: value of p_N and its derivative at x, and the
// Christoffel sum of p_0^2 .. p_{N-1}^2.
template <class Real>
void orthonormal_eval(Real x, std::span<const Real> sqrt_beta, std::span<const Real> inv_sqrt_beta, Real p0,
                      Real& value, Real& deriv, Real& sum_sq) {
  Real pm1 = 0;
  Real p = p0;
  Real dm1 = 0;
  Real d = 0;
  sum_sq = p * p;
  const std::size_t n = sqrt_beta.size();  // sqrt_beta[j] for j = 1..n, stored at j-1
  for (std::size_t j = 0; j < n; ++j) {
    const Real inv_next = inv_sqrt_beta[j];
    const Real b_cur = j == 0 ? Real(0) : sqrt_beta[j - 1];
    const Real pn = (x * p - b_cur * pm1) * inv_next;
    const Real dn = (p + x * d - b_cur * dm1) * inv_next;
    pm1 = p;
    p = pn;
    dm1 = d;
    d = dn;
    if (j + 1 < n) sum_sq += p * p;
  }
  value = p;
  deriv = d;
}

bool converged(double coarse, double fine, double scale, double tol) {
  return std::fabs(fine - coarse) <= tol * std::max(std::fabs(fine), scale);
}

template <unsigned Points, class G>
double gauss_kronrod(G&& g, double a, double b, double tol, double* err) {
  return boost::math::quadrature::gauss_kronrod<double, Points>::integrate(g, a, b, kMaxAdaptiveDepth, tol, err);
}

template <class G>
double adaptive(G&& g, double a, double b, int points, double tol, double* err) {
  if (points <= 15) return gauss_kronrod<15>(g, a, b, tol, err);
  if (points <= 31) return gauss_kronrod<31>(g, a, b, tol, err);
  return gauss_kronrod<61>(g, a, b, tol, err);
}

QuadratureResult integrate_adaptive(const Integrand& f, double k, const QuadratureSpec& spec) {
  double value = 0.0;
  double err = 0.0;
  if (k < 1.0) {
    // 1 - z = u^{1/k} maps the weight on [0, 1] to (1/k) (2 - u^{1/k})^{k-1} du.
    const double inv_k = 1.0 / k;
    auto g = [&](double u) {
      const double t = std::pow(u, inv_k);
      const double z = 1.0 - t;
      return (f(z) + f(-z)) * std::pow(2.0 - t, k - 1.0) * inv_k;
    };
    value = adaptive(g, 0.0, 1.0, spec.points, spec.target_tol, &err);
  } else {
    auto g = [&](double z) { return (f(z) + f(-z)) * std::pow((1.0 - z) * (1.0 + z), k - 1.0); };
    value = adaptive(g, 0.0, 1.0, spec.points, spec.target_tol, &err);
  }
  const bool ok = std::isfinite(value) && (err == 0.0 || err <= spec.target_tol * std::fabs(value));
  if (!ok) throw QuadratureError("integrate_jacobi_weight: adaptive subdivision did not reach target tolerance");
  return {value, err, spec.points};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (points < 2) throw DomainError("QuadratureSpec: points must be >= 2");
  if (!(target_tol > 0.0)) throw DomainError("QuadratureSpec: target_tol must be positive");
}

double jacobi_weight_mass(double k) {
  if (!(k > 0.0)) throw DomainError("jacobi_weight_mass: k must be positive");
  return std::exp(0.5 * std::log(std::numbers::pi) + log_gamma(k) - log_gamma(k + 0.5));
}

GaussJacobiRule::GaussJacobiRule(double k, int points) : k_(k) {
  if (!(k > 0.0)) throw DomainError("GaussJacobiRule: k must be positive");
  if (points < 1) throw DomainError("GaussJacobiRule: points must be >= 1");
  const wide_real a = wide_real(k) - 1;
  const auto n = static_cast<std::size_t>(points);

  std::vector<wide_real> sqrt_beta(n);
  for (std::size_t j = 1; j <= n; ++j) sqrt_beta[j - 1] = detail::xsqrt(recurrence_beta(static_cast<int>(j), a));

  // Double eigenvalues seed a Newton polish carried out in wide precision:
  // near the endpoints the weights are too sensitive to node rounding for
  // a double-only polish once points reach the hundreds.
  std::vector<double> seeds(n, 0.0);
  if (n > 1) {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(n - 1));
    for (std::size_t j = 0; j + 1 < n; ++j) sub[static_cast<Eigen::Index>(j)] = static_cast<double>(sqrt_beta[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    for (std::size_t i = 0; i < n; ++i) seeds[i] = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
  }

  const wide_real mass = detail::xexp(detail::xlog(detail::kWidePi) / 2 + detail::xlgamma(wide_real(k)) -
                                      detail::xlgamma(wide_real(k) + wide_real(0.5)));
  const wide_real p0 = 1 / detail::xsqrt(mass);
  std::vector<wide_real> inv_beta(n);
  std::vector<double> sqrt_beta_d(n), inv_beta_d(n);
  for (std::size_t j = 0; j < n; ++j) {
    inv_beta[j] = 1 / sqrt_beta[j];
    sqrt_beta_d[j] = static_cast<double>(sqrt_beta[j]);
    inv_beta_d[j] = static_cast<double>(inv_beta[j]);
  }
  nodes_.assign(n, 0.0);
  weights_.assign(n, 0.0);
  // Upper half only; the weight is even.
  for (std::size_t i = n / 2; i < n; ++i) {
    const bool centre = n % 2 == 1 && i == n / 2;
    double xd = centre ? 0.0 : std::fabs(seeds[i]);
    double vd = 0.0, dd = 0.0, sd = 0.0;
    for (int it = 0; it < 4 && !centre; ++it) {
      orthonormal_eval<double>(xd, sqrt_beta_d, inv_beta_d, static_cast<double>(p0), vd, dd, sd);
      if (dd == 0.0) break;
      const double step = vd / dd;
      xd -= step;
      if (std::fabs(step) <= 1e-17) break;
    }
    wide_real x = xd;
    wide_real value = 0;
    wide_real deriv = 0;
    wide_real sum_sq = 0;
    if (!centre) {
      orthonormal_eval<wide_real>(x, sqrt_beta, inv_beta, p0, value, deriv, sum_sq);
      if (deriv != 0) x -= value / deriv;
    }
    orthonormal_eval<wide_real>(x, sqrt_beta, inv_beta, p0, value, deriv, sum_sq);
    const std::size_t mirror = n - 1 - i;
    nodes_[i] = static_cast<double>(x);
    nodes_[mirror] = -nodes_[i];
    weights_[i] = static_cast<double>(1 / sum_sq);
    weights_[mirror] = weights_[i];
  }
}

QuadratureResult integrate_jacobi_weight_result(const Integrand& f, double k, const QuadratureSpec& spec) {
  spec.validate();
  if (!(k > 0.0)) throw DomainError("integrate_jacobi_weight: k must be positive");
  if (spec.method == QuadratureMethod::adaptive_subdivision) return integrate_adaptive(f, k, spec);

  int points = spec.points;
  GaussJacobiRule rule(k, points);
  double coarse = rule.integrate(f);
  while (2 * points <= kMaxGaussPoints) {
    points *= 2;
    const GaussJacobiRule finer(k, points);
    const double fine = finer.integrate(f);
    const double scale = finer.integrate([&](double z) { return std::fabs(f(z)); });
    if (converged(coarse, fine, scale, spec.target_tol)) {
      return {fine, std::fabs(fine - coarse), points};
    }
    coarse = fine;
  }
  throw QuadratureError("integrate_jacobi_weight: Gauss-Jacobi refinement did not reach target tolerance");
}

double integrate_jacobi_weight(const Integrand& f, double k, const QuadratureSpec& spec) {
  return integrate_jacobi_weight_result(f, k, spec).value;
}

bool poisson_bessel_check(double k, double u, const QuadratureSpec& spec) {
  if (!(k > 0.0)) throw DomainError("poisson_bessel_check: k must be positive");
  const double integral = integrate_jacobi_weight([u](double z) { return std::exp(u * z); }, k, spec);
  const double g2k = log_gamma(2.0 * k);
  const double lhs = integral / jacobi_weight_mass(k) / (2.0 * std::exp(g2k));
  const double rhs = normalized_bessel_i(k - 0.5, u) / (2.0 * std::exp(g2k));
  return std::fabs(lhs - rhs) <= 1e-10 * std::max(std::fabs(lhs), std::fabs(rhs));
}

}  // namespace dihedral
