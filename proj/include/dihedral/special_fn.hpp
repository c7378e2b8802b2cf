#pragma once

// Scalar special functions: log-gamma, rising factorials, Gegenbauer and
// Chebyshev polynomials, and the modified Bessel function I_nu of real order.

#include <cstddef>
#include <vector>

#include "dihedral/truncation.hpp"

namespace dihedral {

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Rising factorial (x)_m = x (x+1) ... (x+m-1); (x)_0 = 1.
double pochhammer(double x, int m);

/// Checks (x)_{2l} == 4^l (x/2)_l ((1+x)/2)_l to 1e-12 relative.
bool pochhammer_dimidiation_check(double x, int l);

/// C_j^{(k)}(x) by the three-term recurrence. Requires k > 0.
double gegenbauer(int j, double k, double x);

/// C_j^{(k)}(x) from the terminating hypergeometric sum in (1+x)/2.
double gegenbauer_explicit(int j, double k, double x);

/// C_{2j}^{(2 nu)}(x) from the terminating 2F1(-j, j+2nu; 1/2; x^2).
double gegenbauer_even_quadratic(int j, double nu, double x);

/// Chebyshev polynomial of the first kind, by recurrence.
double chebyshev_t(int n, double x);

/// Dense polynomial, coefficients in ascending degree.
struct PolyCoeffs {
  std::vector<double> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  double operator()(double z) const;
};

/// Coefficients of z^n T_n(1/z); only even powers are nonzero.
PolyCoeffs reverse_chebyshev_coeffs(int n);

/// Order of I_nu, restricted to nu > -1/2.
class BesselOrder {
 public:
  explicit BesselOrder(double nu);
  double value() const noexcept { return nu_; }

 private:
  double nu_;
};

/// I_nu(x) for x >= 0 by the ascending series, prefactor folded in log-space.
double bessel_i(BesselOrder nu, double x, const Truncation& trunc = {});
SeriesValue bessel_i_series(BesselOrder nu, double x, const Truncation& trunc = {});

/// Normalized I: Gamma(alpha+1) (2/u)^alpha I_alpha(u)
///   = sum_j (u/2)^{2j} / (j! (alpha+1)_j), equal to 1 at u = 0.
double normalized_bessel_i(double alpha, double u, const Truncation& trunc = {});
SeriesValue normalized_bessel_i_series(double alpha, double u, const Truncation& trunc = {});

/// sum_j (-1)^j (nu+2j) Gamma(nu+j)/j! I_{nu+2j}(R), which should equal (R/2)^nu.
/// Requires nu > 0 and R > 0.
SeriesValue power_neumann_sum(double nu, double R, const Truncation& trunc = {});

/// True iff power_neumann_sum matches (R/2)^nu within trunc.tol relative.
bool power_neumann_check(double nu, double R, const Truncation& trunc = {});

}  // namespace dihedral
