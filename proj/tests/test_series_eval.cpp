#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "dihedral/dihedral_angles.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/series_eval.hpp"
#include "dihedral/special_fn.hpp"

using namespace dihedral;

namespace {

constexpr double pi = std::numbers::pi;

bool close_rel(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::fabs(b); }

// Brute-force Phi_2 over all multi-indices with |j| <= N_max.
double phi2_brute(const std::vector<double>& betas, double gamma, const std::vector<double>& xs, int N_max) {
  double sum = 0.0;
  for (int N = 0; N <= N_max; ++N) {
    MultiIndex mi = MultiIndex::first(static_cast<int>(betas.size()), N);
    do {
      double t = 1.0 / pochhammer(gamma, N);
      for (std::size_t s = 0; s < betas.size(); ++s) {
        const int j = mi.parts[s];
        t *= pochhammer(betas[s], j) * std::pow(xs[s], j) / std::tgamma(j + 1.0);
      }
      sum += t;
    } while (mi.next());
  }
  return sum;
}

}  // namespace

TEST_SUITE("series_eval") {

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(SeriesParams{1, 1.0, 1.0, 0.0}.validate());
  CHECK_THROWS_AS((SeriesParams{0, 1.0, 1.0, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((SeriesParams{1, 0.0, 1.0, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((SeriesParams{1, 1.0, 0.0, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((SeriesParams{1, 1.0, 1.0, 3.5}.validate()), DomainError);
  CHECK_THROWS_AS((Truncation{0.0, 10}.validate()), DomainError);
  CHECK_THROWS_AS((Truncation{1e-15, 0}.validate()), DomainError);
}

TEST_CASE("routes") {
  CHECK(route_name(Route::horn_phi2) == "horn_phi2");
  CHECK(parse_route("integral_n4") == Route::integral_n4);
  CHECK_FALSE(parse_route("nope").has_value());
  CHECK(route_applies(Route::closed_n2, 2));
  CHECK_FALSE(route_applies(Route::closed_n2, 3));
  CHECK(route_applies(Route::direct, 7));
  CHECK_THROWS_AS(evaluate(Route::closed_n1, {2, 1.0, 1.0, 0.0}), DomainError);
}

TEST_CASE("compositions") {
  CHECK(composition_count(3, 4) == 15.0);
  CHECK(composition_count(1, 9) == 1.0);
  CHECK(composition_count(4, 0) == 1.0);
  int seen = 0;
  MultiIndex mi = MultiIndex::first(3, 4);
  do {
    int total = 0;
    for (const int p : mi.parts) total += p;
    CHECK(total == 4);
    ++seen;
  } while (mi.next());
  CHECK(seen == 15);
}

TEST_CASE("direct route") {
  CHECK(close_rel(f_direct({1, 1.0, 1.0, 0.0}).value, std::numbers::e, 1e-15));
  CHECK(close_rel(f_direct({2, 1.0, 1.0, pi / 2}).value, std::sinh(std::sqrt(0.5)) / std::sqrt(2.0), 1e-14));
  // mpmath, 50 digits
  CHECK(close_rel(f_direct({3, 0.5, 2.0, pi / 3}).value, 0.56685482861747415557, 1e-14));
  CHECK(close_rel(f_direct({4, 1.0, 1.0, pi / 2}).value, 0.043793923511810207666, 1e-14));
  CHECK(close_rel(f_direct({5, 0.3, 10.0, pi}).value, 44.55856492137642629, 1e-13));
  CHECK(close_rel(f_direct({1, 0.3, 10.0, pi}).value, 1.5175959487926729204e-05, 1e-12));
  CHECK(close_rel(f_direct({2, 3.5, 10.0, 0.0}).value, 0.058612690553695107937, 1e-13));
  CHECK(close_rel(f_direct({3, 2.0, 5.0, 2 * pi / 3}).value, 0.0060190149958405503225, 1e-13));
}

TEST_CASE("closed forms") {
  CHECK(close_rel(f_closed_n1({1, 1.0, 1.0, pi / 2}).value, 1.0, 1e-15));
  CHECK(close_rel(f_closed_n1({1, 2.0, 3.0, 0.0}).value, std::exp(3.0), 1e-15));
  CHECK(close_rel(f_closed_n1({1, 0.5, 1.0, pi}).value, std::exp(-1.0) / std::sqrt(pi), 1e-15));
  CHECK(close_rel(f_closed_n2({2, 1.0, 7.0, pi}).value, 0.5, 1e-15));
  CHECK(close_rel(f_closed_n2({2, 1.0, 1.0, pi / 2}).value, std::sinh(std::sqrt(0.5)) / std::sqrt(2.0), 1e-14));
  CHECK(close_rel(f_closed_n2({2, 2.5, 4.0, 0.7}).value, f_direct({2, 2.5, 4.0, 0.7}).value, 1e-10));
  CHECK_THROWS_AS(f_closed_n1({2, 1.0, 1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(f_closed_n2({3, 1.0, 1.0, 0.0}), DomainError);
}

TEST_CASE("n = 4 integral route") {
  for (const SeriesParams p : {SeriesParams{4, 1.0, 1.0, pi / 2}, SeriesParams{4, 0.75, 2.0, 0.0}, SeriesParams{4, 1.5, 0.5, pi}})
    CHECK(close_rel(f_integral_n4(p).value, f_direct(p).value, 1e-9));
  CHECK(close_rel(f_integral_n4({4, 1.5, 0.5, pi}).value, f_horn_phi2({4, 1.5, 0.5, pi}).value, 1e-9));
  CHECK_THROWS_AS(f_integral_n4({3, 1.0, 1.0, 0.0}), DomainError);
}

TEST_CASE("Horn series") {
  const std::vector<double> zeros{0.0, 0.0, 0.0};
  const std::vector<double> b3{0.4, 1.0, 2.2};
  CHECK(horn_phi2(b3, 1.3, zeros) == 1.0);
  const std::vector<double> one{1.0};
  CHECK(close_rel(horn_phi2(one, 1.0, one), std::numbers::e, 1e-15));

  // mpmath double sums, 50 digits
  const std::vector<double> b{0.7, 0.7}, x{1.3, -0.4};
  CHECK(close_rel(horn_phi2(b, 1.4, x), 1.8142508291506229644, 1e-14));
  const std::vector<double> b2{1.0, 2.0}, x2{0.5, 2.0};
  CHECK(close_rel(horn_phi2(b2, 2.5, x2), 6.1265682687502613044, 1e-14));

  SUBCASE("shell sums match enumeration") {
    const std::vector<double> bs{0.3, 1.7, 0.9}, xs{0.8, -1.1, 0.45};
    CHECK(close_rel(horn_phi2(bs, 2.1, xs), phi2_brute(bs, 2.1, xs, 60), 1e-13));
  }
  CHECK_THROWS_AS(horn_phi2(b, 1.4, one), DomainError);
}

TEST_CASE("Horn route reproduces the direct series") {
  CHECK(close_rel(f_horn_phi2({2, 1.0, 1.0, pi / 2}).value, std::sinh(std::sqrt(0.5)) / std::sqrt(2.0), 1e-14));
  CHECK(close_rel(f_horn_phi2({3, 0.5, 2.0, pi / 3}).value, f_direct({3, 0.5, 2.0, pi / 3}).value, 1e-10));
  for (const double k : {0.3, 1.0, 3.5})
    for (const double R : {0.1, 5.0})
      for (const double xi : {0.0, 1.2, pi}) CHECK(close_rel(f_horn_phi2({1, k, R, xi}).value, f_closed_n1({1, k, R, xi}).value, 1e-12));
}

TEST_CASE("positivity at xi = 0 and dependence on cos xi only") {
  for (int n = 1; n <= 5; ++n)
    for (const double k : {0.3, 2.0})
      for (const double R : {0.1, 10.0}) {
        CHECK(f_direct({n, k, R, 0.0}).value > 0.0);
        // Horn consumes all n cosines, direct only cos xi; both agree.
        for (const double xi : {0.4, 2.5}) CHECK(close_rel(f_horn_phi2({n, k, R, xi}).value, f_direct({n, k, R, xi}).value, 1e-11));
      }
}

TEST_CASE("truncation soundness") {
  for (int n = 1; n <= 5; ++n)
    for (const double R : {1.0, 10.0}) {
      double tol = 1e-6;
      double prev = f_direct({n, 0.7, R, 2.0}, {tol, 10000}).value;
      for (int step = 0; step < 8; ++step) {
        tol /= 2;
        const double next = f_direct({n, 0.7, R, 2.0}, {tol, 10000}).value;
        CHECK(std::fabs(next - prev) <= 2 * tol * std::fabs(prev));
        prev = next;
      }
    }
}

TEST_CASE("reports and failures") {
  const EvalResult r = f_direct({2, 1.0, 5.0, 1.0});
  CHECK(r.report.terms_used > 1);
  CHECK(r.report.tail_bound <= 1e-15 * std::fabs(r.value));
  CHECK_THROWS_AS(f_direct({1, 1.0, 10.0, 1.0}, {1e-15, 2}), TruncationError);
  CHECK_THROWS_AS(f_horn_phi2({3, 1.0, 10.0, 1.0}, {1e-15, 3}), TruncationError);
}

TEST_CASE("IR1 reduction") {
  for (const double k : {0.3, 1.0, 2.5})
    for (const double x : {-1.0, 0.0, 0.6}) CHECK(ir1_reduce(0, k, x) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ir1_reduce(2, 1.0, 0.6) == doctest::Approx(gegenbauer(2, 1.0, -0.28)).epsilon(1e-12));
  CHECK(ir1_reduce(5, 0.8, 1.0) == doctest::Approx(pochhammer(1.6, 5) / 120.0).epsilon(1e-12));
  for (int j = 0; j <= 8; ++j)
    for (double x = -1.0; x <= 1.0; x += 0.25)
      CHECK(std::fabs(ir1_reduce(j, 2.5, x) - gegenbauer(j, 2.5, 2 * x * x - 1)) <=
            1e-10 * std::max(1.0, std::fabs(gegenbauer(j, 2.5, 2 * x * x - 1))));
}

}
