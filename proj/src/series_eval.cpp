#include "dihedral/series_eval.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dihedral/compensated_sum.hpp"
#include "dihedral/dihedral_angles.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/special_fn.hpp"
#include "kernels.hpp"

namespace dihedral {

namespace {

using detail::wide_real;

constexpr double kInnerTol = 16.0 * detail::kWideEpsilon;

void require_order(const SeriesParams& p, int n, const char* who) {
  p.validate();
  if (p.n != n) throw DomainError(std::string(who) + ": route requires n == " + std::to_string(n));
}

}  // namespace

void SeriesParams::validate() const {
  if (n < 1) throw DomainError("SeriesParams: n must be >= 1");
  if (!(k > 0.0)) throw DomainError("SeriesParams: k must be positive");
  if (!(R > 0.0)) throw DomainError("SeriesParams: R must be positive");
  if (!(xi >= 0.0 && xi <= std::numbers::pi)) throw DomainError("SeriesParams: xi must lie in [0, pi]");
}

std::string_view route_name(Route route) {
  switch (route) {
    case Route::direct:
      return "direct";
    case Route::closed_n1:
      return "closed_n1";
    case Route::closed_n2:
      return "closed_n2";
    case Route::integral_n4:
      return "integral_n4";
    case Route::horn_phi2:
      return "horn_phi2";
  }
  return "unknown";
}

std::optional<Route> parse_route(std::string_view name) {
  for (const Route r : kAllRoutes) {
    if (route_name(r) == name) return r;
  }
  return std::nullopt;
}

bool route_applies(Route route, int n) {
  switch (route) {
    case Route::closed_n1:
      return n == 1;
    case Route::closed_n2:
      return n == 2;
    case Route::integral_n4:
      return n == 4;
    case Route::direct:
    case Route::horn_phi2:
      return n >= 1;
  }
  return false;
}

MultiIndex MultiIndex::first(int num_parts, int total) {
  if (num_parts < 1) throw DomainError("MultiIndex: need at least one part");
  if (total < 0) throw DomainError("MultiIndex: total must be nonnegative");
  MultiIndex idx;
  idx.parts.assign(static_cast<std::size_t>(num_parts), 0);
  idx.parts[0] = total;
  idx.total = total;
  return idx;
}

bool MultiIndex::next() {
  const std::size_t last = parts.size() - 1;
  const int carry = parts[last];
  parts[last] = 0;
  for (std::size_t i = last; i-- > 0;) {
    if (parts[i] > 0) {
      --parts[i];
      parts[i + 1] = carry + 1;
      return true;
    }
  }
  parts[0] = total;  // wrap back to the first composition
  return false;
}

double composition_count(int num_parts, int total) {
  // binom(total + num_parts - 1, num_parts - 1)
  double c = 1.0;
  for (int i = 1; i < num_parts; ++i) c = c * (total + i) / i;
  return c;
}

EvalResult f_direct(const SeriesParams& p, const Truncation& trunc) {
  p.validate();
  trunc.validate();
  const int n = p.n;
  const wide_real k = p.k;
  const wide_real half_r = wide_real(p.R) / 2;
  const wide_real x = std::cos(p.xi);
  const wide_real nk = wide_real(n) * k;
  const double r2_over_4 = p.R * p.R / 4.0;

  // (2/R)^{nk} I_{n(j+k)}(R) = rho_j * normalized I_{n(j+k)}(R) / Gamma(nk + 1)
  // with rho_j = (R/2)^{nj} / (nk + 1)_{nj}.
  wide_real rho = 1;
  wide_real c_prev = 0;
  wide_real c_cur = 1;                // C_0
  wide_real geg_bound = 1;            // (2k)_j / j!
  CompensatedSum<wide_real> sum;
  double tail = std::numeric_limits<double>::infinity();

  for (std::size_t j = 0; j < trunc.max_terms; ++j) {
    const wide_real jw = wide_real(static_cast<double>(j));
    const wide_real order = wide_real(n) * (jw + k);
    const auto bessel = detail::normalized_bessel_sum<wide_real>(order, wide_real(p.R), kInnerTol, trunc.max_terms);
    const wide_real term = (jw + k) * rho * bessel.value * c_cur;
    assert(p.xi != 0.0 || term > 0);
    sum.add(term);

    // Advance rho, C_j and (2k)_j/j! to j + 1.
    wide_real rho_next = rho;
    for (int i = 1; i <= n; ++i) rho_next *= half_r / (order + wide_real(i));
    wide_real c_next = 0;
    if (j == 0) {
      c_next = 2 * k * x;
    } else {
      const wide_real jn = jw + 1;
      c_next = (2 * (jn + k - 1) * x * c_cur - (jn + 2 * k - 2) * c_prev) / jn;
    }
    const wide_real geg_next = geg_bound * (2 * k + jw) / (jw + 1);

    // Tail bound for indices > j: (i + k) rho_i e^{R^2/(4(n(i+k)+1))} (2k)_i / i!,
    // whose successive ratios are dominated by the ratio at i = j + 1.
    const double i1 = static_cast<double>(j) + 1.0;
    const double kd = p.k;
    const double order1 = n * (i1 + kd);
    const wide_real u_next =
        (wide_real(i1) + k) * rho_next * wide_real(std::exp(r2_over_4 / (order1 + 1.0))) * geg_next;
    double ratio = (i1 + 1.0 + kd) / (i1 + kd) * std::max(1.0, (2.0 * kd + i1) / (i1 + 1.0));
    for (int i = 1; i <= n; ++i) ratio *= (p.R / 2.0) / (order1 + i);
    if (ratio < 1.0) {
      tail = static_cast<double>(u_next) / (1.0 - ratio);
      const double partial = static_cast<double>(detail::xabs(sum.value()));
      if (tail <= trunc.tol * partial) {
        const double log_norm = log_gamma(static_cast<double>(nk) + 1.0);
        const wide_real value = sum.value() / wide_real(std::exp(log_norm));
        return {static_cast<double>(value), Route::direct, {j + 1, tail / std::exp(log_norm)}};
      }
    }
    rho = rho_next;
    c_prev = c_cur;
    c_cur = c_next;
    geg_bound = geg_next;
  }
  throw TruncationError("f_direct: term cap reached before the tail bound met tolerance", trunc.max_terms, tail);
}

EvalResult f_closed_n1(const SeriesParams& p) {
  require_order(p, 1, "f_closed_n1");
  return {std::exp(p.R * std::cos(p.xi) - log_gamma(p.k)), Route::closed_n1, {}};
}

EvalResult f_closed_n2(const SeriesParams& p, const Truncation& trunc) {
  require_order(p, 2, "f_closed_n2");
  const SeriesValue s = normalized_bessel_i_series(p.k - 0.5, p.R * std::cos(p.xi / 2.0), trunc);
  const double scale = 0.5 * std::exp(-log_gamma(2.0 * p.k));
  return {scale * s.value, Route::closed_n2, {s.report.terms_used, scale * s.report.tail_bound}};
}

EvalResult f_integral_n4(const SeriesParams& p, const QuadratureSpec& quad, const Truncation& trunc) {
  require_order(p, 4, "f_integral_n4");
  trunc.validate();
  const double c = std::cos(p.xi / 2.0);
  const double alpha = 2.0 * p.k - 0.5;
  auto integrand = [&](double z) {
    const double u = p.R * std::sqrt(std::max(0.0, (1.0 + z * c) / 2.0));
    return normalized_bessel_i(alpha, u, trunc);
  };
  const QuadratureResult q = integrate_jacobi_weight_result(integrand, p.k, quad);
  const double scale = 1.0 / (4.0 * jacobi_weight_mass(p.k) * std::exp(log_gamma(4.0 * p.k)));
  return {scale * q.value, Route::integral_n4,
          {static_cast<std::size_t>(q.points_used), scale * q.error_estimate}};
}

SeriesValue horn_phi2_series(std::span<const double> betas, double gamma, std::span<const double> xs,
                             const Truncation& trunc) {
  trunc.validate();
  if (betas.empty() || betas.size() != xs.size()) {
    throw DomainError("horn_phi2: betas and xs must be nonempty and of equal length");
  }
  if (!(gamma > 0.0)) throw DomainError("horn_phi2: gamma must be positive");
  double beta_sum = 0.0;
  double x_max = 0.0;
  for (std::size_t s = 0; s < betas.size(); ++s) {
    if (!(betas[s] > 0.0)) throw DomainError("horn_phi2: betas must be positive");
    beta_sum += betas[s];
    x_max = std::max(x_max, std::fabs(xs[s]));
  }

  std::vector<wide_real> wide_betas(betas.begin(), betas.end());
  std::vector<wide_real> wide_xs(xs.begin(), xs.end());
  detail::ShellSums<wide_real> shells(std::move(wide_betas), std::move(wide_xs));
  wide_real inv_poch = 1;  // 1 / (gamma)_N
  wide_real bound = 1;     // (B)_N X^N / (N! (gamma)_N), dominates |shell N|
  CompensatedSum<wide_real> sum;
  double tail = std::numeric_limits<double>::infinity();

  for (std::size_t N = 0; N < trunc.max_terms; ++N) {
    const double nd = static_cast<double>(N);
    sum.add(shells.next() * inv_poch);

    const wide_real n_w = nd;
    const wide_real bound_next =
        bound * (wide_real(beta_sum) + n_w) * wide_real(x_max) / ((n_w + 1) * (wide_real(gamma) + n_w));
    const double ratio = std::max(beta_sum, 1.0) * x_max / (gamma + nd + 1.0);
    if (ratio < 1.0) {
      tail = static_cast<double>(bound_next) / (1.0 - ratio);
      if (tail <= trunc.tol * static_cast<double>(detail::xabs(sum.value()))) {
        return {static_cast<double>(sum.value()), {N + 1, tail}};
      }
    }
    bound = bound_next;
    inv_poch /= wide_real(gamma) + wide_real(nd);
  }
  throw TruncationError("horn_phi2: term cap reached before the tail bound met tolerance", trunc.max_terms, tail);
}

double horn_phi2(std::span<const double> betas, double gamma, std::span<const double> xs, const Truncation& trunc) {
  return horn_phi2_series(betas, gamma, xs, trunc).value;
}

EvalResult f_horn_phi2(const SeriesParams& p, const Truncation& trunc) {
  p.validate();
  const AngleSet angles = make_angle_set(p.n, p.xi);
  std::vector<double> xs;
  xs.reserve(angles.cosines.size());
  for (const double b : angles.cosines) xs.push_back(p.R * b);
  const std::vector<double> betas(static_cast<std::size_t>(p.n), p.k);
  const double nk = p.n * p.k;
  const SeriesValue phi = horn_phi2_series(betas, nk, xs, trunc);
  const double scale = std::exp(-std::log(static_cast<double>(p.n)) - log_gamma(nk));
  return {scale * phi.value, Route::horn_phi2, {phi.report.terms_used, scale * phi.report.tail_bound}};
}

double ir1_reduce(int j, double k, double x, const QuadratureSpec& quad) {
  if (j < 0) throw DomainError("ir1_reduce: j must be nonnegative");
  if (!(k > 0.0)) throw DomainError("ir1_reduce: k must be positive");
  QuadratureSpec spec = quad;
  spec.points = std::max(spec.points, j + 1);
  const double integral =
      integrate_jacobi_weight([&](double z) { return gegenbauer(2 * j, 2.0 * k, x * z); }, k, spec);
  return integral / jacobi_weight_mass(k);
}

EvalResult evaluate(Route route, const SeriesParams& p, const Truncation& trunc, const QuadratureSpec& quad) {
  p.validate();
  if (!route_applies(route, p.n)) {
    throw DomainError("route " + std::string(route_name(route)) + " does not apply to n = " + std::to_string(p.n));
  }
  switch (route) {
    case Route::direct:
      return f_direct(p, trunc);
    case Route::closed_n1:
      return f_closed_n1(p);
    case Route::closed_n2:
      return f_closed_n2(p, trunc);
    case Route::integral_n4:
      return f_integral_n4(p, quad, trunc);
    case Route::horn_phi2:
      return f_horn_phi2(p, trunc);
  }
  throw DomainError("unknown route");
}

}  // namespace dihedral
