#include "dihedral/identity_lab.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dihedral/compensated_sum.hpp"
#include "dihedral/dihedral_angles.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/series_eval.hpp"
#include "dihedral/special_fn.hpp"
#include "kernels.hpp"

namespace dihedral {

namespace {

constexpr double kIllConditionedGrowth = 1e12;

void check_common(int n, double k, int N, const char* who) {
  if (n < 1) throw DomainError(std::string(who) + ": n must be >= 1");
  if (!(k > 0.0)) throw DomainError(std::string(who) + ": k must be positive");
  if (N < 0) throw DomainError(std::string(who) + ": N must be nonnegative");
}

}  // namespace

double idgeg_lhs(int n, double k, double xi, int N) {
  check_common(n, k, N, "idgeg_lhs");
  const double x = std::cos(xi);
  const double log_gnk = log_gamma(n * k);
  const double log2N = N * std::numbers::ln2;
  CompensatedSum<double> sum;
  for (int j = 0; n * j <= N; ++j) {
    const int rest = N - n * j;
    if (rest % 2 != 0) continue;
    const int m = rest / 2;
    const double a = n * (j + k);
    const double log_coeff = std::log(a) + log_gnk - log2N - log_gamma(m + 1.0) - log_gamma(a + m + 1.0);
    sum.add(std::exp(log_coeff) * gegenbauer(j, k, x));
  }
  return sum.value();
}

double composition_sum(int n, double k, double xi, int N) {
  check_common(n, k, N, "composition_sum");
  const AngleSet angles = make_angle_set(n, xi);
  // table[s][j] = (k)_j b_s^j / j!
  std::vector<std::vector<double>> table(static_cast<std::size_t>(n),
                                         std::vector<double>(static_cast<std::size_t>(N) + 1));
  for (std::size_t s = 0; s < table.size(); ++s) {
    const double b = angles.cosines[s];
    table[s][0] = 1.0;
    for (int j = 1; j <= N; ++j) table[s][static_cast<std::size_t>(j)] = table[s][j - 1] * (k + j - 1) * b / j;
  }
  CompensatedSum<double> sum;
  MultiIndex idx = MultiIndex::first(n, N);
  do {
    double prod = 1.0;
    for (std::size_t s = 0; s < idx.parts.size(); ++s) prod *= table[s][static_cast<std::size_t>(idx.parts[s])];
    sum.add(prod);
  } while (idx.next());
  return sum.value();
}

double idgeg_rhs(int n, double k, double xi, int N) {
  return composition_sum(n, k, xi, N) / pochhammer(n * k, N);
}

std::vector<IdentityReport> verify_idgeg(int n, double k, double xi, int N_max) {
  check_common(n, k, N_max, "verify_idgeg");
  std::vector<IdentityReport> out;
  out.reserve(static_cast<std::size_t>(N_max) + 1);
  for (int N = 0; N <= N_max; ++N) {
    IdentityReport r{n, k, xi, N, idgeg_lhs(n, k, xi, N), idgeg_rhs(n, k, xi, N), 0.0, 0.0, false};
    r.abs_diff = std::fabs(r.lhs - r.rhs);
    r.rel_diff = r.abs_diff / std::max(1.0, std::fabs(r.lhs));
    r.pass = r.rel_diff <= 1e-12;
    out.push_back(r);
  }
  return out;
}

std::vector<int> idgeg_row_degrees(int n, int N) {
  if (n < 1 || N < 0) throw DomainError("idgeg_row_degrees: need n >= 1 and N >= 0");
  std::vector<int> degrees;
  for (int j = 0; n * j <= N; ++j) {
    if ((N - n * j) % 2 == 0) degrees.push_back(j);
  }
  return degrees;
}

bool odd_n_row_parity_check(int n, int M) {
  if (n % 2 == 0) throw DomainError("odd_n_row_parity_check: n must be odd");
  if (M < 0) throw DomainError("odd_n_row_parity_check: M must be nonnegative");
  for (const int j : idgeg_row_degrees(n, n * M)) {
    if (j % 2 != M % 2) return false;
  }
  return true;
}

namespace {

using detail::wide_real;

wide_real corollary_entry_wide(int q, double k, int row, int col) {
  if (col > row) return 0;
  if (col == row) return 1;
  const wide_real two_q = 2 * q;
  const wide_real kw = k;
  const wide_real log_entry = detail::xlog(two_q * (wide_real(col) + kw)) +
                              detail::xlgamma(two_q * kw + two_q * wide_real(row)) -
                              detail::xlgamma(wide_real(q * (row - col)) + 1) -
                              detail::xlgamma(wide_real(q) * wide_real(col + row) + two_q * kw + 1);
  return detail::xexp(log_entry);
}

// D_j = 2^{2qj} * (composition sum at N = 2qj) for j = 0..j_max, with the
// angle cosines evaluated in extended precision.
std::vector<wide_real> corollary_basis_wide(int q, double k, double xi, int j_max) {
  const int n = 2 * q;
  std::vector<wide_real> betas(static_cast<std::size_t>(n), wide_real(k));
  std::vector<wide_real> xs;
  for (int s = 1; s <= n; ++s) xs.push_back(detail::xcos((wide_real(xi) + 2 * detail::kWidePi * s) / n));
  detail::ShellSums<wide_real> shells(std::move(betas), std::move(xs));
  std::vector<wide_real> basis;
  wide_real scale = 1;
  for (int N = 0; N <= n * j_max; ++N) {
    const wide_real shell = shells.next();
    if (N % n == 0) basis.push_back(scale * shell);
    scale *= 2;
  }
  return basis;
}

}  // namespace

double corollary_matrix_entry(int q, double k, int row, int col) {
  if (q < 1) throw DomainError("corollary_matrix_entry: q must be >= 1");
  if (!(k > 0.0)) throw DomainError("corollary_matrix_entry: k must be positive");
  return static_cast<double>(corollary_entry_wide(q, k, row, col));
}

double corollary_basis(int q, double k, double xi, int j) {
  if (q < 1) throw DomainError("corollary_basis: q must be >= 1");
  if (!(k > 0.0)) throw DomainError("corollary_basis: k must be positive");
  if (j < 0) throw DomainError("corollary_basis: j must be nonnegative");
  return static_cast<double>(corollary_basis_wide(q, k, xi, j).back());
}

InversionCoeffs invert_corollary(int q, double k, int M) {
  if (q < 1) throw DomainError("invert_corollary: q must be >= 1");
  if (!(k > 0.0)) throw DomainError("invert_corollary: k must be positive");
  if (M < 0) throw DomainError("invert_corollary: M must be nonnegative");
  const auto size = static_cast<std::size_t>(M) + 1;
  InversionCoeffs out{q, k, M, std::vector<double>(size, 0.0), std::vector<double>(size, 0.0), 1.0, false};
  // Row M of L^{-1} for the unit lower-triangular L:
  // a_M = 1, a_j = -sum_{i=j+1}^{M} a_i L[i][j].
  std::vector<wide_real> a(size, 0);
  a[size - 1] = 1;
  out.a[size - 1] = 1.0;
  for (int j = M - 1; j >= 0; --j) {
    CompensatedSum<wide_real> acc;
    for (int i = j + 1; i <= M; ++i) acc.add(a[static_cast<std::size_t>(i)] * corollary_entry_wide(q, k, i, j));
    const wide_real aj = -acc.value();
    const auto ju = static_cast<std::size_t>(j);
    a[ju] = aj;
    out.a[ju] = static_cast<double>(aj);
    out.a_tail[ju] = static_cast<double>(aj - wide_real(out.a[ju]));
    out.max_growth = std::max(out.max_growth, std::fabs(out.a[ju]));
  }
  out.ill_conditioned = out.max_growth > kIllConditionedGrowth;
  return out;
}

double corollary_reconstruct(const InversionCoeffs& coeffs, double xi) {
  if (coeffs.a.size() != static_cast<std::size_t>(coeffs.M) + 1 || coeffs.a_tail.size() != coeffs.a.size()) {
    throw DomainError("corollary_reconstruct: malformed coefficients");
  }
  const std::vector<wide_real> basis = corollary_basis_wide(coeffs.q, coeffs.k, xi, coeffs.M);
  CompensatedSum<wide_real> sum;
  for (std::size_t j = 0; j < coeffs.a.size(); ++j) {
    sum.add((wide_real(coeffs.a[j]) + wide_real(coeffs.a_tail[j])) * basis[j]);
  }
  return static_cast<double>(sum.value());
}

namespace {

struct WideSides {
  wide_real lhs = 0;
  wide_real rhs = 0;
  wide_real rhs_magnitude = 0;
};

WideSides n2_inverse_sides_wide(double k, int M, double x) {
  if (!(k > 0.0)) throw DomainError("n2_inverse_expansion: k must be positive");
  if (M < 0) throw DomainError("n2_inverse_expansion: M must be nonnegative");
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("n2_inverse_expansion: x must lie in [-1, 1]");
  const wide_real kw = k;
  const wide_real xw = x;
  WideSides sides;
  wide_real power = 1;
  for (int i = 0; i < M; ++i) power *= (1 + xw) / 2;
  sides.lhs = power * detail::xexp(-detail::xlgamma(2 * kw));
  wide_real prefactor = 1;  // (k+1/2)_M M!
  for (int i = 0; i < M; ++i) prefactor *= (kw + wide_real(0.5) + i) * (i + 1);
  CompensatedSum<wide_real> sum;
  for (int j = 0; j <= M; ++j) {
    const wide_real log_coeff = detail::xlog(2 * (wide_real(j) + kw)) - detail::xlgamma(wide_real(M - j + 1)) -
                                detail::xlgamma(wide_real(j + M + 1) + 2 * kw);
    const wide_real term = prefactor * detail::xexp(log_coeff) * detail::gegenbauer_recurrence<wide_real>(j, kw, xw);
    sum.add(term);
    sides.rhs_magnitude += detail::xabs(term);
  }
  sides.rhs = sum.value();
  return sides;
}

}  // namespace

ExpansionSides n2_inverse_expansion_sides(double k, int M, double x) {
  const WideSides w = n2_inverse_sides_wide(k, M, x);
  return {static_cast<double>(w.lhs), static_cast<double>(w.rhs), static_cast<double>(w.rhs_magnitude)};
}

bool n2_inverse_expansion_check(double k, int M, double x) {
  const WideSides s = n2_inverse_sides_wide(k, M, x);
  // When the left side vanishes (x = -1) the right side must cancel relative
  // to the size of its own terms.
  const wide_real scale =
      s.lhs == 0 ? s.rhs_magnitude : std::max(detail::xabs(s.lhs), detail::xabs(s.rhs));
  return detail::xabs(s.lhs - s.rhs) <= wide_real(1e-11) * scale;
}

double dilcher_representation(int j, int k, double xi, double subset_cap) {
  if (j < 0) throw DomainError("dilcher_representation: j must be nonnegative");
  if (k < 1) throw DomainError("dilcher_representation: k must be an integer >= 1");
  const int pool = j + k - 1;
  if (composition_count(j + 1, pool - j) > subset_cap) {
    throw CombinatorialSizeError("dilcher_representation: subset count exceeds cap");
  }
  const double c = std::cos(xi);
  std::vector<double> factor(static_cast<std::size_t>(pool) + 1, 0.0);
  for (int m = 1; m <= pool; ++m) factor[static_cast<std::size_t>(m)] = c + std::cos(m * std::numbers::pi / (j + k));

  // Enumerate increasing j-tuples from {1..pool} in lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(j));
  for (int s = 0; s < j; ++s) pick[static_cast<std::size_t>(s)] = s + 1;
  CompensatedSum<double> sum;
  while (true) {
    double prod = 1.0;
    for (const int m : pick) prod *= factor[static_cast<std::size_t>(m)];
    sum.add(prod);
    int s = j - 1;
    while (s >= 0 && pick[static_cast<std::size_t>(s)] == pool - (j - 1 - s)) --s;
    if (s < 0) break;
    ++pick[static_cast<std::size_t>(s)];
    for (int t = s + 1; t < j; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
  }
  return std::ldexp(sum.value(), j);
}

}  // namespace dihedral
