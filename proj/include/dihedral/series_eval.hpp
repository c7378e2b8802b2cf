#pragma once

// F_{n,k}(R, xi) = (2/R)^{nk} sum_j (j+k) I_{n(j+k)}(R) C_j^{(k)}(cos xi),
// evaluated by independent routes.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dihedral/quadrature.hpp"
#include "dihedral/truncation.hpp"

namespace dihedral {

struct SeriesParams {
  int n = 1;
  double k = 1.0;
  double R = 1.0;
  double xi = 0.0;

  /// Throws DomainError unless n >= 1, k > 0, R > 0 and 0 <= xi <= pi.
  void validate() const;
};

enum class Route { direct, closed_n1, closed_n2, integral_n4, horn_phi2 };

inline constexpr Route kAllRoutes[] = {Route::direct, Route::closed_n1, Route::closed_n2, Route::integral_n4,
                                       Route::horn_phi2};

std::string_view route_name(Route route);
std::optional<Route> parse_route(std::string_view name);

/// Whether the route is defined for dihedral order n.
bool route_applies(Route route, int n);

struct EvalResult {
  double value = 0.0;
  Route route = Route::direct;
  TruncationReport report;
};

/// A composition (j_1, ..., j_n) of total degree N.
struct MultiIndex {
  std::vector<int> parts;
  int total = 0;

  /// (N, 0, ..., 0), the first composition in enumeration order.
  static MultiIndex first(int num_parts, int total);

  /// Steps to the next composition of the same total; false once exhausted.
  bool next();
};

/// Number of compositions of `total` into `num_parts` nonnegative parts.
double composition_count(int num_parts, int total);

/// Truncated summation of the defining series. Extended-precision internally.
EvalResult f_direct(const SeriesParams& p, const Truncation& trunc = {});

/// e^{R cos xi} / Gamma(k). Requires n == 1.
EvalResult f_closed_n1(const SeriesParams& p);

/// normalized_bessel_i(k - 1/2, R cos(xi/2)) / (2 Gamma(2k)). Requires n == 2.
EvalResult f_closed_n2(const SeriesParams& p, const Truncation& trunc = {});

/// Gamma(k+1/2) / (4 sqrt(pi) Gamma(k) Gamma(4k))
///   * int normalized_bessel_i(2k - 1/2, R sqrt((1 + z cos(xi/2))/2)) (1-z^2)^{k-1} dz.
/// Requires n == 4.
EvalResult f_integral_n4(const SeriesParams& p, const QuadratureSpec& quad = {}, const Truncation& trunc = {});

/// Horn's confluent Phi_2^{(m)}(betas; gamma; xs), summed shell by shell in the
/// total degree N. Shell sums are Cauchy products of the one-variable series
/// (beta_s)_j x_s^j / j!, accumulated in extended precision.
SeriesValue horn_phi2_series(std::span<const double> betas, double gamma, std::span<const double> xs,
                             const Truncation& trunc = {});
double horn_phi2(std::span<const double> betas, double gamma, std::span<const double> xs,
                 const Truncation& trunc = {});

/// Phi_2^{(n)}(k, ..., k; nk; R b_1, ..., R b_n) / (n Gamma(nk)).
EvalResult f_horn_phi2(const SeriesParams& p, const Truncation& trunc = {});

/// Gamma(k+1/2)/(sqrt(pi) Gamma(k)) int C_{2j}^{(2k)}(x z) (1-z^2)^{k-1} dz,
/// which reduces to C_j^{(k)}(2x^2 - 1).
double ir1_reduce(int j, double k, double x, const QuadratureSpec& quad = {});

/// Dispatches to the route. Throws DomainError if the route does not apply.
EvalResult evaluate(Route route, const SeriesParams& p, const Truncation& trunc = {},
                    const QuadratureSpec& quad = {});

}  // namespace dihedral
