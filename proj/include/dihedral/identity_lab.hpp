#pragma once

// Per-degree Gegenbauer/Horn identity, the triangular inversion expressing
// Gegenbauer polynomials through angle-cosine composition sums, and related
// finite representations.

#include <cstddef>
#include <vector>

namespace dihedral {

struct IdentityReport {
  int n = 0;
  double k = 0.0;
  double xi = 0.0;
  int N = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;  // abs_diff / max(1, |lhs|)
  bool pass = false;
};

/// sum over 2m + nj = N of n(j+k) Gamma(nk) / (2^N m! Gamma(n(j+k)+m+1)) C_j^{(k)}(cos xi).
double idgeg_lhs(int n, double k, double xi, int N);

/// sum over compositions |j| = N of (k)_{j_1}...(k)_{j_n} / (nk)_N * prod_s b_s^{j_s} / j_s!.
double idgeg_rhs(int n, double k, double xi, int N);

/// Unnormalized composition sum: sum_{|j| = N} prod_s (k)_{j_s} b_s^{j_s} / j_s!.
double composition_sum(int n, double k, double xi, int N);

/// Reports for N = 0..N_max; a report passes when abs_diff <= 1e-12 max(1, |lhs|).
std::vector<IdentityReport> verify_idgeg(int n, double k, double xi, int N_max);

/// Degrees j appearing in row N of the left side (pairs with 2m + nj = N).
std::vector<int> idgeg_row_degrees(int n, int N);

/// For odd n, true iff every degree in row N = nM has the parity of M.
bool odd_n_row_parity_check(int n, int M);

struct InversionCoeffs {
  int q = 0;
  double k = 0.0;
  int M = 0;
  std::vector<double> a;       // a_0..a_M rounded to double, with a_M = 1
  std::vector<double> a_tail;  // exact a_j - a[j]; a + a_tail carries ~32 digits
  double max_growth = 0.0;    // largest |a_j| met during substitution
  bool ill_conditioned = false;
};

/// Entry (row, col) of the unit lower-triangular system for n = 2q:
/// 2q(col+k) Gamma(2qk + 2q row) / ((q(row-col))! Gamma(q col + q row + 2qk + 1)).
double corollary_matrix_entry(int q, double k, int row, int col);

/// Basis value for column j: 2^{2qj} * composition_sum(2q, k, xi, 2qj).
double corollary_basis(int q, double k, double xi, int j);

/// Coefficients with C_M^{(k)}(cos xi) = sum_j a_j corollary_basis(q, k, xi, j),
/// obtained by substitution against the unit-diagonal triangular system.
/// The coefficients do not depend on xi. They grow quickly with q and M and
/// the reconstruction cancels accordingly, so both are carried out in
/// extended precision.
InversionCoeffs invert_corollary(int q, double k, int M);

/// sum_j a_j corollary_basis(q, k, xi, j).
double corollary_reconstruct(const InversionCoeffs& coeffs, double xi);

/// Checks (1/Gamma(2k)) ((1+x)/2)^M against
/// (k+1/2)_M M! sum_{j<=M} 2(j+k) / ((M-j)! Gamma(j+2k+M+1)) C_j^{(k)}(x) to 1e-11.
bool n2_inverse_expansion_check(double k, int M, double x);

/// Both sides of the n = 2 inverse expansion, and the sum of |terms| on the right.
struct ExpansionSides {
  double lhs = 0.0;
  double rhs = 0.0;
  double rhs_magnitude = 0.0;
};
ExpansionSides n2_inverse_expansion_sides(double k, int M, double x);

inline constexpr double kDefaultSubsetCap = 1e7;

/// 2^j sum over j-subsets {m_1 < ... < m_j} of {1..j+k-1} of
/// prod_s (cos xi + cos(m_s pi / (j+k))). Requires integer k >= 1.
double dilcher_representation(int j, int k, double xi, double subset_cap = kDefaultSubsetCap);

}  // namespace dihedral
