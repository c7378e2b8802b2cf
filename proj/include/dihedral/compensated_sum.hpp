#pragma once

#include <cmath>

namespace dihedral {

// Neumaier's variant of Kahan summation. Works for any floating type with
// the usual arithmetic operators and an ADL-visible fabs/abs.
template <class Real>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(Real init) : sum_(init) {}

  void add(Real x) {
    const Real t = sum_ + x;
    if (magnitude(sum_) >= magnitude(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(Real x) {
    add(x);
    return *this;
  }

  Real value() const { return sum_ + comp_; }

 private:
  static Real magnitude(Real x) { return x < Real(0) ? -x : x; }

  Real sum_{0};
  Real comp_{0};
};

}  // namespace dihedral
