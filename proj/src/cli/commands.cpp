#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "dihedral/cli.hpp"
#include "dihedral/dihedral_angles.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/identity_lab.hpp"
#include "dihedral/quadrature.hpp"
#include "dihedral/special_fn.hpp"

namespace dihedral::cli {

namespace {

constexpr double pi = std::numbers::pi;

const std::vector<double> kDefaultK{0.3, 0.5, 1.0, 2.0, 3.5};
const std::vector<double> kDefaultR{0.1, 1.0, 5.0, 10.0};

std::vector<double> xi_grid(int points) {
  std::vector<double> g;
  for (int i = 0; i < points; ++i) g.push_back(i + 1 == points ? pi : pi * i / (points - 1));
  return g;
}

std::vector<double> x_grid9() {
  std::vector<double> g;
  for (int i = 0; i <= 8; ++i) g.push_back(-1.0 + 0.25 * i);
  return g;
}

std::vector<int> int_span(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

template <class T>
std::vector<T> pick(const std::optional<std::vector<T>>& given, const std::vector<T>& fallback) {
  return given ? *given : fallback;
}

double rel_diff(double value, double ref) {
  if (value == ref) return 0.0;
  return std::fabs(value - ref) / std::fabs(ref);
}

// Relative difference with the reference floored at one, for references that
// can vanish (roots of C_j).
double floored_diff(double value, double ref) {
  return std::fabs(value - ref) / std::max(1.0, std::fabs(ref));
}

std::string describe(std::initializer_list<std::pair<const char*, double>> parts) {
  std::string s;
  for (const auto& [name, v] : parts) {
    if (!s.empty()) s += ' ';
    s += name;
    s += '=';
    s += format_real(v);
  }
  return s;
}

struct SuiteRow {
  std::string suite;
  std::string label;
  double residual;
  double tolerance;
};

using SuiteRows = std::vector<SuiteRow>;
using SuiteFn = std::function<void(const RunConfig&, SuiteRows&)>;

void suite_idgeg(const RunConfig& cfg, SuiteRows& rows) {
  for (const int n : pick(cfg.n, int_span(1, 5)))
    for (const double k : pick(cfg.k, kDefaultK))
      for (const double xi : pick(cfg.xi, xi_grid(7)))
        for (const IdentityReport& r : verify_idgeg(n, k, xi, cfg.N_max)) {
          const std::string label = describe({{"n", n}, {"k", k}, {"xi", xi}, {"N", r.N}});
          rows.push_back({"idgeg", label, r.rel_diff, 1e-12});
          if (n % 2 == 0 && r.N % 2 == 1) {
            rows.push_back({"idgeg_parity", label, std::max(std::fabs(r.lhs), std::fabs(r.rhs)), 1e-13});
          }
        }
}

void suite_lemma1(const RunConfig& cfg, SuiteRows& rows) {
  const auto xis = pick(cfg.xi, xi_grid(11));
  for (const int n : pick(cfg.n, int_span(2, 8))) {
    std::vector<double> lo(static_cast<std::size_t>(n) + 1, INFINITY), hi(lo.size(), -INFINITY);
    for (const double xi : xis) {
      const AngleSet set = make_angle_set(n, xi);
      const SymmetricProfile prof = SymmetricProfile::of(set.cosines);
      for (int m = 0; m <= n; ++m) {
        const double e = prof.elementary[static_cast<std::size_t>(m)];
        const std::string label = describe({{"n", n}, {"xi", xi}, {"m", m}});
        rows.push_back({"lemma1", label, std::fabs(e - lemma1_predicted_e(n, xi, m)), 1e-12});
        if (m >= 1) rows.push_back({"newton", label, std::fabs(prof.newton_residual(m)), 1e-12});
        lo[static_cast<std::size_t>(m)] = std::min(lo[static_cast<std::size_t>(m)], e);
        hi[static_cast<std::size_t>(m)] = std::max(hi[static_cast<std::size_t>(m)], e);
      }
    }
    for (int m = 0; m < n; ++m) {
      const auto i = static_cast<std::size_t>(m);
      rows.push_back({"lemma1_constancy", describe({{"n", n}, {"m", m}}), hi[i] - lo[i], 1e-12});
    }
  }
}

void suite_ir1(const RunConfig& cfg, SuiteRows& rows) {
  for (const int j : int_span(0, cfg.j_max))
    for (const double k : pick(cfg.k, {0.3, 1.0, 2.5}))
      for (const double x : x_grid9()) {
        const double ref = gegenbauer(j, k, 2.0 * x * x - 1.0);
        const double got = ir1_reduce(j, k, x);
        rows.push_back({"ir1", describe({{"j", j}, {"k", k}, {"x", x}}), floored_diff(got, ref), 1e-10});
      }
}

void suite_moments(const RunConfig& cfg, SuiteRows& rows) {
  for (const double k : pick(cfg.k, kDefaultK))
    for (int m = 0; m <= 10; ++m) {
      const auto monomial = [m](double z) { return std::pow(z, 2 * m); };
      const double got = integrate_jacobi_weight(monomial, k) / jacobi_weight_mass(k);
      const double ref = pochhammer(0.5, m) / pochhammer(k + 0.5, m);
      rows.push_back({"moments", describe({{"k", k}, {"m", m}}), rel_diff(got, ref), 1e-11});
    }
}

void suite_corollary(const RunConfig& cfg, SuiteRows& rows) {
  for (const int q : {1, 2, 3})
    for (const double k : pick(cfg.k, {0.4, 1.0, 2.0}))
      for (const int M : int_span(0, cfg.M_max)) {
        const InversionCoeffs c = invert_corollary(q, k, M);
        const std::string head = describe({{"q", q}, {"k", k}, {"M", M}});
        rows.push_back({"corollary_leading", head, std::fabs(c.a.back() - 1.0), 0.0});
        for (const double xi : pick(cfg.xi, xi_grid(7))) {
          const double ref = gegenbauer(M, k, std::cos(xi));
          rows.push_back({"corollary", head + ' ' + describe({{"xi", xi}}),
                          floored_diff(corollary_reconstruct(c, xi), ref), 1e-9});
        }
      }
}

void suite_dilcher(const RunConfig& cfg, SuiteRows& rows) {
  std::vector<double> ks{1.0, 2.0, 3.0};
  if (cfg.k) {
    ks.clear();
    for (const double k : *cfg.k)
      if (k == std::floor(k) && k >= 1.0) ks.push_back(k);
  }
  for (const int j : int_span(0, cfg.j_max))
    for (const double k : ks)
      for (const double xi : pick(cfg.xi, xi_grid(7))) {
        const double ref = gegenbauer(j, k, std::cos(xi));
        const double got = dilcher_representation(j, static_cast<int>(k), xi);
        rows.push_back({"dilcher", describe({{"j", j}, {"k", k}, {"xi", xi}}), floored_diff(got, ref), 1e-10});
      }
}

void suite_neumann(const RunConfig& cfg, SuiteRows& rows) {
  const Truncation trunc{1e-14, cfg.max_terms};
  for (const double nu : pick(cfg.k, {0.5, 1.0, 2.0, 3.5}))
    for (const double R : pick(cfg.R, {0.5, 1.0, 4.0})) {
      const double got = power_neumann_sum(nu, R, trunc).value;
      rows.push_back({"neumann", describe({{"nu", nu}, {"R", R}}), rel_diff(got, std::pow(R / 2.0, nu)), 1e-11});
    }
}

void suite_n2inverse(const RunConfig& cfg, SuiteRows& rows) {
  for (const int M : int_span(0, 8))
    for (const double k : pick(cfg.k, {0.4, 1.0, 2.5}))
      for (const double x : x_grid9()) {
        const ExpansionSides s = n2_inverse_expansion_sides(k, M, x);
        const double scale = s.lhs == 0.0 ? s.rhs_magnitude : std::max(std::fabs(s.lhs), std::fabs(s.rhs));
        const double diff = std::fabs(s.lhs - s.rhs);
        const double residual = diff == 0.0 ? 0.0 : diff / scale;
        rows.push_back({"n2inverse", describe({{"M", M}, {"k", k}, {"x", x}}), residual, 1e-11});
      }
}

void suite_factorization(const RunConfig& cfg, SuiteRows& rows) {
  for (const int n : pick(cfg.n, int_span(1, 8))) {
    const PolyCoeffs rc = reverse_chebyshev_coeffs(n);
    for (const double xi : pick(cfg.xi, xi_grid(7))) {
      const AngleSet set = make_angle_set(n, xi);
      double worst = 0.0;
      for (int i = 0; i <= 16; ++i) {
        const double z = -2.0 + 0.25 * i;
        const double lhs = 2.0 * rc(z) - 2.0 * std::cos(xi) * std::pow(z, n);
        double rhs = std::ldexp(1.0, n);
        for (const double b : set.cosines) rhs *= 1.0 - b * z;
        worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
      }
      rows.push_back({"factorization", describe({{"n", n}, {"xi", xi}}), worst, 1e-11});
    }
  }
}

void suite_dimidiation(const RunConfig& cfg, SuiteRows& rows) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> xs(0.0, 10.0);
  std::uniform_int_distribution<int> ls(0, 12);
  for (int i = 0; i < 64; ++i) {
    const double x = xs(rng);
    const int l = ls(rng);
    const double lhs = pochhammer(x, 2 * l);
    const double rhs = std::ldexp(1.0, 2 * l) * pochhammer(x / 2.0, l) * pochhammer((1.0 + x) / 2.0, l);
    rows.push_back({"dimidiation", describe({{"x", x}, {"l", l}}), rel_diff(lhs, rhs), 1e-12});
  }
}

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"idgeg", suite_idgeg},         {"lemma1", suite_lemma1},
      {"ir1", suite_ir1},             {"moments", suite_moments},
      {"corollary", suite_corollary}, {"dilcher", suite_dilcher},
      {"neumann", suite_neumann},     {"n2inverse", suite_n2inverse},
      {"factorization", suite_factorization}, {"dimidiation", suite_dimidiation},
  };
  return table;
}

std::vector<SeriesParams> series_grid(const RunConfig& cfg) {
  std::vector<int> ns = pick(cfg.n, {1});
  std::vector<double> ks = pick(cfg.k, kDefaultK);
  std::vector<double> Rs = pick(cfg.R, kDefaultR);
  std::vector<double> xis = pick(cfg.xi, xi_grid(7));
  std::sort(ns.begin(), ns.end());
  std::sort(ks.begin(), ks.end());
  std::sort(Rs.begin(), Rs.end());
  std::sort(xis.begin(), xis.end());
  std::vector<SeriesParams> grid;
  for (const int n : ns)
    for (const double k : ks)
      for (const double R : Rs)
        for (const double xi : xis) {
          SeriesParams p{n, k, R, xi};
          p.validate();
          grid.push_back(p);
        }
  if (grid.empty()) throw DomainError("empty parameter grid");
  return grid;
}

std::vector<Field> series_row(const SeriesParams& p, const EvalResult& r) {
  return {static_cast<long long>(p.n), p.k, p.R, p.xi, std::string(route_name(r.route)), r.value,
          static_cast<long long>(r.report.terms_used), r.report.tail_bound};
}

const std::vector<std::string> kSeriesColumns{"n", "k", "R", "xi", "route", "value", "terms_used", "tail_bound"};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suites()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Truncation trunc{cfg.tol, cfg.max_terms};
  trunc.validate();
  Table table{kSeriesColumns, {}};
  table.columns.push_back("max_rel_disagreement");
  for (const SeriesParams& p : series_grid(cfg)) {
    std::vector<Route> routes = cfg.routes;
    if (routes.empty()) {
      for (const Route r : kAllRoutes)
        if (route_applies(r, p.n)) routes.push_back(r);
    }
    std::vector<EvalResult> results;
    for (const Route r : routes) results.push_back(evaluate(r, p, trunc));
    double spread = 0.0;
    for (std::size_t a = 0; a < results.size(); ++a)
      for (std::size_t b = a + 1; b < results.size(); ++b) {
        const double x = results[a].value, y = results[b].value;
        if (x != y) spread = std::max(spread, std::fabs(x - y) / std::max(std::fabs(x), std::fabs(y)));
      }
    for (const EvalResult& r : results) {
      auto row = series_row(p, r);
      row.emplace_back(spread);
      table.rows.push_back(std::move(row));
    }
  }
  write_table(out, table, cfg.format);
  return exit_code::ok;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.routes.size() > 1) throw DomainError("table takes a single route");
  const Route route = cfg.routes.empty() ? Route::direct : cfg.routes.front();
  const Truncation trunc{cfg.tol, cfg.max_terms};
  trunc.validate();
  Table table{kSeriesColumns, {}};
  for (const SeriesParams& p : series_grid(cfg)) table.rows.push_back(series_row(p, evaluate(route, p, trunc)));
  write_table(out, table, cfg.format);
  return exit_code::ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.N_max < 0 || cfg.j_max < 0 || cfg.M_max < 0) throw DomainError("grid limits must be nonnegative");
  std::vector<std::string> chosen;
  for (const std::string& s : cfg.suites) {
    if (s == "all") {
      for (const auto& [name, fn] : suites()) chosen.push_back(name);
      continue;
    }
    const auto it = std::find_if(suites().begin(), suites().end(), [&](const auto& e) { return e.first == s; });
    if (it == suites().end()) throw DomainError("unknown suite '" + s + "'");
    chosen.push_back(s);
  }

  SuiteRows rows;
  for (const std::string& name : chosen) {
    const auto it = std::find_if(suites().begin(), suites().end(), [&](const auto& e) { return e.first == name; });
    it->second(cfg, rows);
  }

  Table table{{"suite", "case", "residual", "tolerance", "pass"}, {}};
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // failed, total
  for (const SuiteRow& r : rows) {
    const bool pass = r.residual <= r.tolerance;
    auto& t = tally[r.suite];
    t.first += pass ? 0 : 1;
    ++t.second;
    table.rows.push_back({r.suite, r.label, r.residual, r.tolerance, pass});
  }
  write_table(out, table, cfg.format);

  bool ok = true;
  for (const auto& [suite, t] : tally) {
    if (t.first == 0) continue;
    ok = false;
    err << suite << ": " << t.first << " of " << t.second << " cases failed\n";
  }
  return ok ? exit_code::ok : exit_code::identity_failure;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  // Records are buffered so a failing run leaves no partial output behind.
  std::ostringstream buffer;
  int code = exit_code::ok;
  try {
    switch (cfg.command) {
      case Command::eval: code = cmd_eval(cfg, buffer, err); break;
      case Command::verify: code = cmd_verify(cfg, buffer, err); break;
      case Command::table: code = cmd_table(cfg, buffer, err); break;
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_code::domain_error;
  } catch (const CombinatorialSizeError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_code::domain_error;
  } catch (const TruncationError& e) {
    err << "truncation failure: " << e.what() << '\n';
    return exit_code::numeric_failure;
  } catch (const QuadratureError& e) {
    err << "quadrature failure: " << e.what() << '\n';
    return exit_code::numeric_failure;
  }

  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file) {
      err << "cannot open " << *cfg.output_path << " for writing\n";
      return exit_code::domain_error;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace dihedral::cli
