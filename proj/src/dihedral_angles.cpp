#include "dihedral/dihedral_angles.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dihedral/compensated_sum.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/special_fn.hpp"

namespace dihedral {

namespace {

double binomial(int n, int r) {
  if (r < 0 || r > n) return 0.0;
  r = std::min(r, n - r);
  double b = 1.0;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_xi(double xi, const char* who) {
  if (!(xi >= 0.0 && xi <= std::numbers::pi)) {
    throw DomainError(std::string(who) + ": xi must lie in [0, pi]");
  }
}

}  // namespace

AngleSet make_angle_set(int n, double xi) {
  if (n < 1) throw DomainError("make_angle_set: n must be >= 1");
  check_xi(xi, "make_angle_set");
  AngleSet set{n, xi, {}, {}};
  set.thetas.reserve(static_cast<std::size_t>(n));
  set.cosines.reserve(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s) {
    const double theta = (xi + 2.0 * std::numbers::pi * s) / n;
    set.thetas.push_back(theta);
    set.cosines.push_back(std::cos(theta));
  }
  return set;
}

std::vector<double> elementary_symmetric(std::span<const double> values) {
  std::vector<double> e(values.size() + 1, 0.0);
  e[0] = 1.0;
  std::size_t filled = 0;
  for (const double v : values) {
    ++filled;
    for (std::size_t m = filled; m >= 1; --m) e[m] += v * e[m - 1];
  }
  return e;
}

std::vector<double> power_sums(std::span<const double> values, int max_order) {
  if (max_order < 0) throw DomainError("power_sums: max_order must be nonnegative");
  std::vector<double> p(static_cast<std::size_t>(max_order) + 1, 0.0);
  for (const double v : values) {
    double pw = 1.0;
    for (auto& pj : p) {
      pj += pw;
      pw *= v;
    }
  }
  return p;
}

SymmetricProfile SymmetricProfile::of(std::span<const double> values) {
  return {elementary_symmetric(values), dihedral::power_sums(values, static_cast<int>(values.size()))};
}

double SymmetricProfile::newton_residual(int m) const {
  const int n = static_cast<int>(elementary.size()) - 1;
  if (m < 1 || m > n) throw DomainError("newton_residual: m must lie in [1, n]");
  CompensatedSum<double> rhs;
  for (int j = 1; j <= m; ++j) {
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    rhs.add(sign * elementary[static_cast<std::size_t>(m - j)] * power_sums[static_cast<std::size_t>(j)]);
  }
  return std::fabs(m * elementary[static_cast<std::size_t>(m)] - rhs.value());
}

double lemma1_predicted_e(int n, double xi, int m) {
  if (n < 2) throw DomainError("lemma1_predicted_e: n must be >= 2");
  if (m < 0 || m > n) throw DomainError("lemma1_predicted_e: m must lie in [0, n]");
  check_xi(xi, "lemma1_predicted_e");
  if (m == n) {
    const double scale = std::ldexp(1.0, -(n - 1));
    if (n % 2 == 1) return scale * std::cos(xi);
    const double sign = ((n / 2) % 2 == 0) ? 1.0 : -1.0;
    return scale * (sign - std::cos(xi));
  }
  if (m % 2 == 1) return 0.0;
  const int j = m / 2;
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  return n * sign * factorial(n - j - 1) / (std::ldexp(1.0, 2 * j) * factorial(j) * factorial(n - 2 * j));
}

double linearized_cos_power(double theta, int p) {
  if (p < 0) throw DomainError("linearized_cos_power: p must be nonnegative");
  const int j = p / 2;
  CompensatedSum<double> sum;
  if (p % 2 == 0) {
    sum.add(binomial(2 * j, j));
    for (int s = 1; s <= j; ++s) sum.add(2.0 * binomial(2 * j, j - s) * std::cos(2.0 * s * theta));
  } else {
    for (int s = 0; s <= j; ++s) sum.add(binomial(2 * j + 1, j - s) * std::cos((2.0 * s + 1.0) * theta));
  }
  return std::ldexp(sum.value(), -2 * j);
}

bool factorization_check(int n, double xi, std::span<const double> z_samples) {
  const AngleSet set = make_angle_set(n, xi);
  const PolyCoeffs rc = reverse_chebyshev_coeffs(n);
  const double c = std::cos(xi);
  for (const double z : z_samples) {
    const double lhs = 2.0 * rc(z) - 2.0 * c * std::pow(z, n);
    double rhs = std::ldexp(1.0, n);
    for (const double b : set.cosines) rhs *= 1.0 - b * z;
    if (!(std::fabs(lhs - rhs) <= 1e-11 * std::max(1.0, std::fabs(rhs)))) return false;
  }
  return true;
}

double root_residual(int n, double xi, double b) {
  if (b == 0.0) throw DomainError("root_residual: zero cosine has no reciprocal root");
  const PolyCoeffs rc = reverse_chebyshev_coeffs(n);
  const double z = 1.0 / b;
  const double zn = std::pow(z, n);
  const double value = 2.0 * rc(z) - 2.0 * std::cos(xi) * zn;
  return std::fabs(value) / std::max(1.0, std::fabs(zn));
}

}  // namespace dihedral
