#pragma once

// Multiple angles theta_s = (xi + 2 pi s)/n and the symmetric functions of
// their cosines.

#include <span>
#include <vector>

namespace dihedral {

struct AngleSet {
  int n = 0;
  double xi = 0.0;
  std::vector<double> thetas;   // theta_s, s = 1..n
  std::vector<double> cosines;  // b_s = cos theta_s
};

/// Requires n >= 1 and 0 <= xi <= pi.
AngleSet make_angle_set(int n, double xi);

/// e_0..e_n of the values (e_0 = 1), by multiplying out prod_s (1 + v_s z).
std::vector<double> elementary_symmetric(std::span<const double> values);

/// p_0..p_{max_order} with p_j = sum_s v_s^j.
std::vector<double> power_sums(std::span<const double> values, int max_order);

struct SymmetricProfile {
  std::vector<double> elementary;  // e_0..e_n
  std::vector<double> power_sums;  // p_0..p_n

  static SymmetricProfile of(std::span<const double> values);

  /// |m e_m - sum_{j=1}^m (-1)^{j-1} e_{m-j} p_j| for 1 <= m <= n.
  double newton_residual(int m) const;
};

/// Closed-form value of e_m(b_1..b_n) for the dihedral cosines, 2 <= n, 0 <= m <= n.
double lemma1_predicted_e(int n, double xi, int m);

/// cos^p(theta) through its linearization as a sum of cos(l theta).
double linearized_cos_power(double theta, int p);

/// Checks 2 z^n T_n(1/z) - 2 cos(xi) z^n == 2^n prod_s (1 - b_s z) at every
/// sample, to 1e-11 * max(1, |rhs|).
bool factorization_check(int n, double xi, std::span<const double> z_samples);

/// Value of 2 z^n T_n(1/z) - 2 cos(xi) z^n at z = 1/b, divided by max(1, |z|^n).
/// Requires b != 0.
double root_residual(int n, double xi, double b);

}  // namespace dihedral
