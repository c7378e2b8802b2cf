#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "dihedral/dihedral_angles.hpp"
#include "dihedral/errors.hpp"

using namespace dihedral;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> xi_grid11() {
  std::vector<double> g;
  for (int i = 0; i <= 10; ++i) g.push_back(i == 10 ? pi : pi * i / 10);
  return g;
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("dihedral_angles") {

TEST_CASE("angle sets") {
  const AngleSet one = make_angle_set(1, 0.4);
  REQUIRE(one.cosines.size() == 1);
  CHECK(one.thetas[0] == doctest::Approx(0.4 + 2 * pi));
  CHECK(one.cosines[0] == doctest::Approx(std::cos(0.4)).epsilon(1e-15));

  const AngleSet two = make_angle_set(2, 1.1);
  CHECK(two.cosines[0] == doctest::Approx(-std::cos(0.55)).epsilon(1e-14));
  CHECK(two.cosines[1] == doctest::Approx(std::cos(0.55)).epsilon(1e-14));

  const AngleSet four = make_angle_set(4, 0.0);
  const double expect[] = {0.0, -1.0, 0.0, 1.0};
  for (int s = 0; s < 4; ++s) CHECK(std::fabs(four.cosines[s] - expect[s]) <= 1e-15);

  CHECK_THROWS_AS(make_angle_set(0, 0.1), DomainError);
  CHECK_THROWS_AS(make_angle_set(3, -0.1), DomainError);
  CHECK_THROWS_AS(make_angle_set(3, 3.2), DomainError);
}

TEST_CASE("angle set invariants") {
  for (int n = 1; n <= 9; ++n)
    for (const double xi : xi_grid11()) {
      const AngleSet set = make_angle_set(n, xi);
      CHECK(set.cosines.size() == static_cast<std::size_t>(n));
      double sum = 0.0;
      for (std::size_t s = 0; s < set.cosines.size(); ++s) {
        CHECK(std::fabs(set.cosines[s]) <= 1.0);
        CHECK(std::fabs(std::cos(n * set.thetas[s]) - std::cos(xi)) <= 1e-13);
        sum += set.cosines[s];
      }
      if (n >= 2) CHECK(std::fabs(sum) <= 1e-14);
    }
}

TEST_CASE("elementary symmetric functions") {
  CHECK(elementary_symmetric(std::vector<double>{2.5}) == std::vector<double>{1.0, 2.5});
  CHECK(elementary_symmetric(std::vector<double>{1, 2, 3}) == std::vector<double>{1, 6, 11, 6});
  for (const double xi : xi_grid11()) {
    const auto e = elementary_symmetric(make_angle_set(3, xi).cosines);
    CHECK(std::fabs(e[3] - std::cos(xi) / 4) <= 1e-15);
  }
}

TEST_CASE("power sums") {
  const std::vector<double> v{0.3, -1.2, 2.0};
  CHECK(power_sums(v, 0)[0] == 3.0);
  for (const double xi : xi_grid11()) {
    CHECK(std::fabs(power_sums(make_angle_set(3, xi).cosines, 2)[2] - 1.5) <= 1e-14);
    CHECK(std::fabs(power_sums(make_angle_set(5, xi).cosines, 3)[3]) <= 1e-14);
  }
  // Even power sums below the order are binomial, odd ones vanish.
  for (int n = 2; n <= 8; ++n)
    for (const double xi : xi_grid11()) {
      const auto p = power_sums(make_angle_set(n, xi).cosines, n - 1);
      for (int j = 1; j < n; ++j) {
        const double ref = (j % 2) ? 0.0 : n * binom(j, j / 2) / std::ldexp(1.0, j);
        CHECK(std::fabs(p[j] - ref) <= 1e-13);
      }
    }
}

TEST_CASE("Newton identities") {
  for (int n = 1; n <= 10; ++n)
    for (const double xi : xi_grid11()) {
      const SymmetricProfile prof = SymmetricProfile::of(make_angle_set(n, xi).cosines);
      CHECK(prof.elementary[0] == 1.0);
      CHECK(prof.power_sums[0] == n);
      for (int m = 1; m <= n; ++m) CHECK(std::fabs(prof.newton_residual(m)) <= 1e-13);
    }
  const SymmetricProfile arbitrary = SymmetricProfile::of(std::vector<double>{0.5, -2.0, 3.25, 1.0});
  for (int m = 1; m <= 4; ++m) CHECK(std::fabs(arbitrary.newton_residual(m)) <= 1e-12);
}

TEST_CASE("predicted elementary symmetric functions") {
  CHECK(lemma1_predicted_e(4, 0.9, 2) == doctest::Approx(-1.0));
  CHECK(lemma1_predicted_e(3, 0.9, 3) == doctest::Approx(std::cos(0.9) / 4));
  CHECK(lemma1_predicted_e(2, 0.9, 2) == doctest::Approx((-1 - std::cos(0.9)) / 2));
  CHECK(lemma1_predicted_e(6, 0.9, 3) == 0.0);
  CHECK_THROWS_AS(lemma1_predicted_e(4, 0.9, 5), DomainError);
}

TEST_CASE("predicted values match the computed ones and are constant below the top order") {
  for (int n = 2; n <= 8; ++n) {
    std::vector<double> lo(n + 1, 1e300), hi(n + 1, -1e300);
    for (const double xi : xi_grid11()) {
      const auto e = elementary_symmetric(make_angle_set(n, xi).cosines);
      for (int m = 0; m <= n; ++m) {
        CHECK(std::fabs(e[m] - lemma1_predicted_e(n, xi, m)) <= 1e-12);
        lo[m] = std::min(lo[m], e[m]);
        hi[m] = std::max(hi[m], e[m]);
      }
    }
    for (int m = 0; m < n; ++m) CHECK(hi[m] - lo[m] <= 1e-12);
  }
}

TEST_CASE("odd n: the even closed form reaches m = n - 1") {
  // e_{n-1} for odd n is the j = (n-1)/2 member of the even-m family.
  for (const int n : {3, 5, 7}) {
    const int j = (n - 1) / 2;
    const double closed = (j % 2 ? -1.0 : 1.0) * n * std::tgamma(n - j) / (std::ldexp(1.0, 2 * j) * std::tgamma(j + 1) * std::tgamma(n - 2 * j + 1));
    for (const double xi : xi_grid11()) {
      const auto e = elementary_symmetric(make_angle_set(n, xi).cosines);
      CHECK(std::fabs(e[n - 1] - closed) <= 1e-13);
    }
  }
  CHECK(std::fabs(elementary_symmetric(make_angle_set(3, 0.2).cosines)[2] + 0.75) <= 1e-15);
}

TEST_CASE("linearized cosine powers") {
  CHECK(linearized_cos_power(0.7, 0) == 1.0);
  CHECK(linearized_cos_power(0.7, 2) == doctest::Approx((1 + std::cos(1.4)) / 2).epsilon(1e-15));
  for (int p = 0; p <= 14; ++p)
    for (const double t : {0.0, 0.8, 2.1, pi}) CHECK(std::fabs(linearized_cos_power(t, p) - std::pow(std::cos(t), p)) <= 1e-14);
}

TEST_CASE("reverse Chebyshev factorization") {
  std::vector<double> zs;
  for (int i = 0; i < 20; ++i) zs.push_back(-2.0 + 4.0 * i / 19);
  CHECK(factorization_check(2, 0.6, zs));
  CHECK(factorization_check(1, 0.6, zs));
  CHECK(factorization_check(5, pi / 3, zs));
  for (int n = 1; n <= 8; ++n)
    for (const double xi : xi_grid11()) CHECK(factorization_check(n, xi, zs));
}

TEST_CASE("reciprocal cosines are roots") {
  for (int n = 1; n <= 8; ++n)
    for (const double xi : {0.3, 1.0, 2.9}) {
      for (const double b : make_angle_set(n, xi).cosines)
        if (std::fabs(b) > 1e-3) CHECK(root_residual(n, xi, b) <= 1e-12);
    }
  CHECK_THROWS_AS(root_residual(3, 0.2, 0.0), DomainError);
}

}
