#include "dihedral/special_fn.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "kernels.hpp"

namespace dihedral {

namespace {

void require_nonnegative(int m, const char* what) {
  if (m < 0) throw DomainError(std::string(what) + ": index must be nonnegative");
}

bool rel_close(double a, double b, double rtol) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= rtol * scale;
}

// ln I_nu(x) for x > 0.
double log_bessel_i(double nu, double x, const Truncation& trunc, TruncationReport* report) {
  const auto s = detail::normalized_bessel_sum<double>(nu, x, trunc.tol, trunc.max_terms);
  const double log_prefactor = nu * std::log(x / 2.0) - log_gamma(nu + 1.0);
  if (report != nullptr) {
    report->terms_used = s.terms;
    report->tail_bound = s.tail_bound > 0.0 ? std::exp(log_prefactor + std::log(s.tail_bound)) : 0.0;
  }
  return log_prefactor + std::log(s.value);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double pochhammer(double x, int m) {
  require_nonnegative(m, "pochhammer");
  double p = 1.0;
  for (int i = 0; i < m; ++i) p *= x + i;
  return p;
}

bool pochhammer_dimidiation_check(double x, int l) {
  require_nonnegative(l, "pochhammer_dimidiation_check");
  const double lhs = pochhammer(x, 2 * l);
  const double rhs = std::ldexp(1.0, 2 * l) * pochhammer(x / 2.0, l) * pochhammer((1.0 + x) / 2.0, l);
  return lhs == rhs || rel_close(lhs, rhs, 1e-12);
}

double gegenbauer(int j, double k, double x) {
  require_nonnegative(j, "gegenbauer");
  if (!(k > 0.0)) throw DomainError("gegenbauer: parameter k must be positive");
  return detail::gegenbauer_recurrence<double>(j, k, x);
}

double gegenbauer_explicit(int j, double k, double x) {
  require_nonnegative(j, "gegenbauer_explicit");
  if (!(k > 0.0)) throw DomainError("gegenbauer_explicit: parameter k must be positive");
  const double y = (1.0 + x) / 2.0;
  // m = 0 term: (-1)^j (2k)_j / j!
  double term = (j % 2 == 0 ? 1.0 : -1.0);
  for (int i = 0; i < j; ++i) term *= (2.0 * k + i) / (i + 1.0);
  CompensatedSum<double> sum(term);
  for (int m = 0; m < j; ++m) {
    term *= -static_cast<double>(j - m) / (m + 1.0) * (2.0 * k + j + m) / (k + 0.5 + m) * y;
    sum.add(term);
  }
  return sum.value();
}

double gegenbauer_even_quadratic(int j, double nu, double x) {
  require_nonnegative(j, "gegenbauer_even_quadratic");
  if (!(nu > 0.0)) throw DomainError("gegenbauer_even_quadratic: nu must be positive");
  const double x2 = x * x;
  double prefactor = (j % 2 == 0 ? 1.0 : -1.0);
  for (int i = 0; i < j; ++i) prefactor *= (2.0 * nu + i) / (i + 1.0);
  double term = 1.0;
  CompensatedSum<double> sum(term);
  for (int m = 0; m < j; ++m) {
    term *= static_cast<double>(m - j) * (j + 2.0 * nu + m) / ((0.5 + m) * (m + 1.0)) * x2;
    sum.add(term);
  }
  return prefactor * sum.value();
}

double chebyshev_t(int n, double x) {
  require_nonnegative(n, "chebyshev_t");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int i = 2; i <= n; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double PolyCoeffs::operator()(double z) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PolyCoeffs reverse_chebyshev_coeffs(int n) {
  if (n < 1) throw DomainError("reverse_chebyshev_coeffs: n must be >= 1");
  const int half = n / 2;
  const int degree = 2 * half;
  PolyCoeffs p;
  p.coeffs.assign(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int j = 0; j <= half; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    double c = 0.0;
    if (2 * j == n) {
      c = sign;
    } else {
      // n 2^{n-2j-1} binom(n-j-1, j) / (n-2j)
      double binom = 1.0;
      for (int i = 1; i <= j; ++i) binom = binom * (n - 2 * j - 1 + i) / i;
      c = sign * n * std::ldexp(binom, n - 2 * j - 1) / (n - 2 * j);
    }
    p.coeffs[static_cast<std::size_t>(2 * j)] = c;
  }
  return p;
}

BesselOrder::BesselOrder(double nu) : nu_(nu) {
  if (!(nu > -0.5)) throw DomainError("BesselOrder: order must exceed -1/2");
}

SeriesValue bessel_i_series(BesselOrder order, double x, const Truncation& trunc) {
  trunc.validate();
  const double nu = order.value();
  if (!(x >= 0.0)) throw DomainError("bessel_i: argument must be nonnegative");
  if (x == 0.0) {
    if (nu == 0.0) return {1.0, {1, 0.0}};
    if (nu > 0.0) return {0.0, {1, 0.0}};
    throw DomainError("bessel_i: I_nu(0) is unbounded for negative order");
  }
  SeriesValue out;
  const double lv = log_bessel_i(nu, x, trunc, &out.report);
  out.value = std::exp(lv);
  return out;
}

double bessel_i(BesselOrder nu, double x, const Truncation& trunc) {
  return bessel_i_series(nu, x, trunc).value;
}

SeriesValue normalized_bessel_i_series(double alpha, double u, const Truncation& trunc) {
  trunc.validate();
  if (!(alpha > -0.5)) throw DomainError("normalized_bessel_i: alpha must exceed -1/2");
  const auto s = detail::normalized_bessel_sum<double>(alpha, u, trunc.tol, trunc.max_terms);
  return {s.value, {s.terms, s.tail_bound}};
}

double normalized_bessel_i(double alpha, double u, const Truncation& trunc) {
  return normalized_bessel_i_series(alpha, u, trunc).value;
}

SeriesValue power_neumann_sum(double nu, double R, const Truncation& trunc) {
  trunc.validate();
  if (!(nu > 0.0)) throw DomainError("power_neumann_sum: requires nu > 0 (Gamma(nu) pole at nu = 0)");
  if (!(R > 0.0)) throw DomainError("power_neumann_sum: requires R > 0");
  const Truncation inner{1e-17, trunc.max_terms};
  CompensatedSum<double> sum;
  double prev_mag = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < trunc.max_terms; ++j) {
    const double jd = static_cast<double>(j);
    const double order = nu + 2.0 * jd;
    const double log_mag = std::log(order) + log_gamma(nu + jd) - log_gamma(jd + 1.0) +
                           log_bessel_i(order, R, inner, nullptr);
    const double mag = std::exp(log_mag);
    // Alternating with eventually decreasing magnitudes: the first neglected
    // term bounds the remainder.
    const double s = sum.value();
    if (j > 0 && mag <= prev_mag && mag <= trunc.tol * std::fabs(s)) {
      return {s, {j, mag}};
    }
    sum.add(j % 2 == 0 ? mag : -mag);
    prev_mag = mag;
  }
  throw TruncationError("power_neumann_sum: term cap reached", trunc.max_terms, prev_mag);
}

bool power_neumann_check(double nu, double R, const Truncation& trunc) {
  trunc.validate();
  const Truncation series{std::max(trunc.tol * 1e-3, 1e-17), trunc.max_terms};
  const double lhs = std::pow(R / 2.0, nu);
  const double rhs = power_neumann_sum(nu, R, series).value;
  return rel_close(lhs, rhs, trunc.tol);
}

}  // namespace dihedral
