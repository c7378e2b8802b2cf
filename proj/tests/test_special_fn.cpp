#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "doctest.h"
#include "dihedral/errors.hpp"
#include "dihedral/special_fn.hpp"

using namespace dihedral;

namespace {

bool close_rel(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::fabs(b); }

}  // namespace

TEST_SUITE("special_fn") {

TEST_CASE("log_gamma at known points") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(close_rel(log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-15));
  CHECK(close_rel(log_gamma(10.0), std::log(362880.0), 1e-15));
  // mpmath, 50 digits
  CHECK(close_rel(log_gamma(0.3), 1.0957979948180755217, 1e-15));
  CHECK(close_rel(log_gamma(123.4), 469.33609744219055844, 1e-15));
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(2.0, 3) == 24.0);
  CHECK(pochhammer(0.5, 0) == 1.0);
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK_THROWS_AS(pochhammer(1.0, -1), DomainError);

  // (2k+j+m)_m (2k)_{j+m} = (2k)_{j+2m}
  const double k = 1.5;
  const int j = 2, m = 3;
  const double lhs = pochhammer(2 * k + j + m, m) * pochhammer(2 * k, j + m);
  CHECK(close_rel(lhs, pochhammer(2 * k, j + 2 * m), 1e-13));
}

TEST_CASE("dimidiation") {
  CHECK(pochhammer_dimidiation_check(3.0, 2));
  CHECK(pochhammer(3.0, 4) == 360.0);
  CHECK(pochhammer_dimidiation_check(1.0, 0));
  CHECK(pochhammer_dimidiation_check(0.7, 5));
  for (int l = 0; l <= 15; ++l)
    for (double x = 0.05; x < 12.0; x += 0.73) CHECK(pochhammer_dimidiation_check(x, l));
}

TEST_CASE("gegenbauer recurrence") {
  CHECK(gegenbauer(0, 2.3, 0.4) == 1.0);
  CHECK(gegenbauer(3, 1.0, 1.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(close_rel(gegenbauer(4, 0.75, -0.3), gegenbauer_explicit(4, 0.75, -0.3), 1e-13));
  CHECK_THROWS_AS(gegenbauer(2, 0.0, 0.1), DomainError);
  CHECK_THROWS_AS(gegenbauer(-1, 1.0, 0.1), DomainError);

  SUBCASE("value at one is (2k)_j / j!") {
    for (const double k : {0.3, 1.0, 2.5})
      for (int j = 0; j <= 20; ++j) {
        double ref = 1.0;
        for (int i = 0; i < j; ++i) ref *= (2 * k + i) / (i + 1.0);
        CHECK(close_rel(gegenbauer(j, k, 1.0), ref, 1e-13));
        CHECK(close_rel(gegenbauer(j, k, -1.0), (j % 2 ? -ref : ref), 1e-13));
      }
  }
  SUBCASE("k = 1 gives Chebyshev U") {
    for (int j = 0; j <= 12; ++j)
      for (double t = 0.1; t < 3.1; t += 0.37) {
        const double ref = std::sin((j + 1) * t) / std::sin(t);
        CHECK(std::fabs(gegenbauer(j, 1.0, std::cos(t)) - ref) <= 1e-12 * std::max(1.0, std::fabs(ref)));
      }
  }
  SUBCASE("bounded by the value at one on [-1, 1]") {
    for (int j = 0; j <= 15; ++j)
      for (double x = -1.0; x <= 1.0; x += 0.0625) CHECK(std::fabs(gegenbauer(j, 0.8, x)) <= gegenbauer(j, 0.8, 1.0) * (1 + 1e-14));
  }
}

TEST_CASE("explicit sum") {
  for (const double x : {-0.9, -0.2, 0.35, 1.0}) CHECK(close_rel(gegenbauer_explicit(1, 1.7, x), 2 * 1.7 * x, 1e-14));
  CHECK(close_rel(gegenbauer_explicit(5, 2.5, 0.4), gegenbauer(5, 2.5, 0.4), 1e-12));
  // The alternating sum cancels; the sum of its absolute terms is C_j(2 + x).
  for (int j = 0; j <= 12; ++j)
    for (const double k : {0.3, 1.0, 3.0})
      for (double x = -1.0; x <= 1.0; x += 0.25)
        CHECK(std::fabs(gegenbauer_explicit(j, k, x) - gegenbauer(j, k, x)) <= 1e-14 * gegenbauer(j, k, 2.0 + x));
}

TEST_CASE("even quadratic transformation") {
  CHECK(gegenbauer_even_quadratic(0, 0.9, 0.3) == 1.0);
  CHECK(close_rel(gegenbauer_even_quadratic(1, 1.0, 0.5), gegenbauer(2, 2.0, 0.5), 1e-13));
  CHECK(close_rel(gegenbauer_even_quadratic(3, 0.6, -0.9), gegenbauer(6, 1.2, -0.9), 1e-12));
  for (int j = 0; j <= 8; ++j)
    for (double x = -1.0; x <= 1.0; x += 0.125)
      CHECK(std::fabs(gegenbauer_even_quadratic(j, 0.45, x) - gegenbauer(2 * j, 0.9, x)) <=
            1e-12 * std::max(1.0, std::fabs(gegenbauer(2 * j, 0.9, 1.0))));
}

TEST_CASE("chebyshev") {
  CHECK(chebyshev_t(0, 0.77) == 1.0);
  CHECK(chebyshev_t(2, 0.3) == doctest::Approx(2 * 0.09 - 1).epsilon(1e-15));
  CHECK(std::fabs(chebyshev_t(7, 0.3) - std::cos(7 * std::acos(0.3))) <= 1e-14);
}

TEST_CASE("reverse chebyshev coefficients") {
  CHECK(reverse_chebyshev_coeffs(1).coeffs == std::vector<double>{1.0});
  CHECK(reverse_chebyshev_coeffs(2).coeffs == std::vector<double>{2.0, 0.0, -1.0});
  // T_5 = 16x^5 - 20x^3 + 5x reversed
  CHECK(reverse_chebyshev_coeffs(5).coeffs == std::vector<double>{16.0, 0.0, -20.0, 0.0, 5.0});
  for (int n = 1; n <= 12; ++n) {
    const PolyCoeffs p = reverse_chebyshev_coeffs(n);
    for (const double z : {0.3, 0.7, -1.6, 2.0})
      CHECK(std::fabs(p(z) - std::pow(z, n) * chebyshev_t(n, 1.0 / z)) <= 1e-12 * std::max(1.0, std::fabs(p(z))));
    for (std::size_t i = 1; i < p.coeffs.size(); i += 2) CHECK(p.coeffs[i] == 0.0);
  }
  CHECK_THROWS_AS(reverse_chebyshev_coeffs(0), DomainError);
}

TEST_CASE("bessel_i against closed forms and frozen values") {
  CHECK(bessel_i(BesselOrder(0.0), 0.0) == 1.0);
  CHECK(bessel_i(BesselOrder(1.3), 0.0) == 0.0);
  CHECK(close_rel(bessel_i(BesselOrder(0.5), 1.0), std::sqrt(2.0 / std::numbers::pi) * std::sinh(1.0), 1e-14));
  // mpmath besseli, 50 digits
  CHECK(close_rel(bessel_i(BesselOrder(3.5), 2.0), 0.10690548828463336718, 1e-14));
  CHECK(close_rel(bessel_i(BesselOrder(2.0), 5.0), 17.505614966624236015, 1e-14));
  CHECK(close_rel(bessel_i(BesselOrder(1.7), 3.2), 3.3722855213698287733, 1e-14));
  CHECK(close_rel(bessel_i(BesselOrder(40.0), 10.0), 2.042123273987862066e-20, 1e-13));
  CHECK_THROWS_AS(BesselOrder(-0.7), DomainError);
  CHECK_THROWS_AS(bessel_i(BesselOrder(1.0), -1.0), DomainError);
}

TEST_CASE("bessel series is stable when the term budget grows") {
  const SeriesValue a = bessel_i_series(BesselOrder(3.5), 2.0, {1e-15, 10000});
  const SeriesValue b = bessel_i_series(BesselOrder(3.5), 2.0, {1e-17, 20000});
  CHECK(close_rel(a.value, b.value, 1e-13));
  CHECK(a.report.tail_bound <= 1e-15 * a.value);
  CHECK_THROWS_AS(bessel_i_series(BesselOrder(1.0), 30.0, {1e-15, 3}), TruncationError);
}

TEST_CASE("normalized bessel") {
  for (const double a : {0.0, 0.5, 3.7}) CHECK(normalized_bessel_i(a, 0.0) == 1.0);
  CHECK(close_rel(normalized_bessel_i(0.5, 1.0), std::sinh(1.0), 1e-14));
  const double alt = std::exp(std::lgamma(2.7)) * std::pow(2.0 / 3.2, 1.7) * bessel_i(BesselOrder(1.7), 3.2);
  CHECK(close_rel(normalized_bessel_i(1.7, 3.2), alt, 1e-13));
  // Even in u and increasing in |u|.
  CHECK(normalized_bessel_i(2.2, -1.3) == normalized_bessel_i(2.2, 1.3));
  CHECK(normalized_bessel_i(2.2, 1.4) > normalized_bessel_i(2.2, 1.3));
}

TEST_CASE("power Neumann series") {
  CHECK(close_rel(power_neumann_sum(2.0, 1.0).value, 0.25, 1e-13));
  CHECK(close_rel(power_neumann_sum(3.0, 4.0).value, 8.0, 1e-13));
  CHECK(power_neumann_check(2.0, 1.0));
  CHECK(power_neumann_check(3.0, 4.0));
  for (const double nu : {0.5, 1.0, 2.0, 3.5})
    for (const double R : {0.5, 1.0, 4.0}) CHECK(power_neumann_check(nu, R, {1e-11, 10000}));
  CHECK_THROWS_AS(power_neumann_sum(0.0, 1.0), DomainError);
}

TEST_CASE("concurrent calls agree") {
  std::vector<double> out(8);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < out.size(); ++i)
    pool.emplace_back([&out, i] { out[i] = log_gamma(0.3) + bessel_i(BesselOrder(2.5), 3.0) + gegenbauer(9, 0.7, 0.2); });
  for (auto& t : pool) t.join();
  for (const double v : out) CHECK(v == out.front());
}

}
