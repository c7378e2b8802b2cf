#pragma once

// Precision-generic kernels shared by the public double API and the
// extended-precision series routes.

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "dihedral/compensated_sum.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/truncation.hpp"
#include "wide_real.hpp"

namespace dihedral::detail {

template <class Real>
Real gegenbauer_recurrence(int j, Real k, Real x) {
  if (j == 0) return Real(1);
  Real prev = Real(1);
  Real cur = Real(2) * k * x;
  for (int i = 2; i <= j; ++i) {
    const Real ri = Real(i);
    const Real next = (Real(2) * (ri + k - Real(1)) * x * cur - (ri + Real(2) * k - Real(2)) * prev) / ri;
    prev = cur;
    cur = next;
  }
  return cur;
}

template <class Real>
struct KernelSum {
  Real value{0};
  std::size_t terms = 0;
  double tail_bound = 0.0;
};

// sum_m (u/2)^{2m} / (m! (alpha+1)_m); positive terms with a decreasing ratio,
// so the tail after the last kept term t is at most t_next / (1 - r_next).
template <class Real>
KernelSum<Real> normalized_bessel_sum(Real alpha, Real u, double tol, std::size_t max_terms) {
  const Real q = (u / Real(2)) * (u / Real(2));
  KernelSum<Real> out;
  if (q == Real(0)) {
    out.value = Real(1);
    out.terms = 1;
    return out;
  }
  CompensatedSum<Real> sum(Real(1));
  Real term = Real(1);
  for (std::size_t m = 0; m < max_terms; ++m) {
    const Real md = Real(static_cast<double>(m));
    const Real next = term * q / ((md + Real(1)) * (alpha + md + Real(1)));
    const Real ratio = q / ((md + Real(2)) * (alpha + md + Real(2)));
    const Real s = sum.value();
    if (ratio < Real(1)) {
      const Real tail = next / (Real(1) - ratio);
      if (tail <= Real(tol) * s || next == Real(0)) {
        out.value = s;
        out.terms = m + 1;
        out.tail_bound = static_cast<double>(tail);
        return out;
      }
    }
    sum.add(next);
    term = next;
  }
  throw TruncationError("normalized_bessel_i: term cap reached", max_terms,
                        std::numeric_limits<double>::infinity());
}

}  // namespace dihedral::detail

namespace dihedral::detail {

// Shell sums of prod_s sum_j (beta_s)_j x_s^j / j!: shell N is the sum over
// compositions |j| = N, produced in order N = 0, 1, 2, ... as Cauchy products.
template <class Real>
class ShellSums {
 public:
  ShellSums(std::vector<Real> betas, std::vector<Real> xs)
      : betas_(std::move(betas)), xs_(std::move(xs)), coeff_(betas_.size()), prod_(betas_.size()) {}

  Real next() {
    const std::size_t N = count_++;
    const Real nd = Real(static_cast<double>(N));
    for (std::size_t s = 0; s < betas_.size(); ++s) {
      if (N == 0) {
        coeff_[s].push_back(Real(1));
      } else {
        coeff_[s].push_back(coeff_[s].back() * (betas_[s] + nd - Real(1)) * xs_[s] / nd);
      }
      if (s == 0) {
        prod_[0].push_back(coeff_[0][N]);
      } else {
        CompensatedSum<Real> conv;
        for (std::size_t i = 0; i <= N; ++i) conv.add(prod_[s - 1][i] * coeff_[s][N - i]);
        prod_[s].push_back(conv.value());
      }
    }
    return prod_.back()[N];
  }

 private:
  std::vector<Real> betas_;
  std::vector<Real> xs_;
  std::vector<std::vector<Real>> coeff_;
  std::vector<std::vector<Real>> prod_;
  std::size_t count_ = 0;
};

}  // namespace dihedral::detail
