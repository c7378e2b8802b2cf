#pragma once

// Integration over [-1, 1] against the symmetric Jacobi weight (1 - z^2)^{k-1}.

#include <functional>
#include <span>
#include <vector>

namespace dihedral {

enum class QuadratureMethod { gauss_jacobi, adaptive_subdivision };

struct QuadratureSpec {
  QuadratureMethod method = QuadratureMethod::gauss_jacobi;
  int points = 32;  // rule size for gauss_jacobi, panel rule size for adaptive
  double target_tol = 1e-13;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int points_used = 0;
};

/// Gauss rule for the weight (1 - z^2)^{k-1}, i.e. Jacobi exponents (k-1, k-1).
/// Immutable once built; safe to share between threads.
class GaussJacobiRule {
 public:
  GaussJacobiRule(double k, int points);

  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  double k() const { return k_; }

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    double comp = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const double y = weights_[i] * f(nodes_[i]) - comp;
      const double t = acc + y;
      comp = (t - acc) - y;
      acc = t;
    }
    return acc;
  }

 private:
  double k_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Total mass of the weight: sqrt(pi) Gamma(k) / Gamma(k + 1/2).
double jacobi_weight_mass(double k);

using Integrand = std::function<double(double)>;

/// int_{-1}^{1} f(z) (1 - z^2)^{k-1} dz. The endpoints are never sampled.
/// Throws QuadratureError when target_tol cannot be met.
QuadratureResult integrate_jacobi_weight_result(const Integrand& f, double k, const QuadratureSpec& spec = {});
double integrate_jacobi_weight(const Integrand& f, double k, const QuadratureSpec& spec = {});

/// Compares Gamma(k+1/2)/(2 sqrt(pi) Gamma(k) Gamma(2k)) int e^{uz} (1-z^2)^{k-1} dz
/// with normalized_bessel_i(k - 1/2, u) / (2 Gamma(2k)) to 1e-10 relative.
bool poisson_bessel_check(double k, double u, const QuadratureSpec& spec = {});

}  // namespace dihedral
