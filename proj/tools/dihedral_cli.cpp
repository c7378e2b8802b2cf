#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dihedral/cli.hpp"
#include "dihedral/errors.hpp"

namespace {

using namespace dihedral::cli;

std::string join(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) s += (s.empty() ? "" : " ") + t;
  return s;
}

struct RawOptions {
  std::vector<std::string> n, k, R, xi, routes, suites;
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* app, RawOptions& raw, RunConfig& cfg) {
  app->add_option("--n", raw.n, "dihedral orders, e.g. 1..5 or 2,4");
  app->add_option("--k", raw.k, "parameter k values");
  app->add_option("--R", raw.R, "radius values, e.g. 0.5..5 step 0.5");
  app->add_option("--xi", raw.xi, "angles in [0, pi], e.g. 0..pi step pi/8");
  app->add_option("--tol", cfg.tol, "series truncation tolerance");
  app->add_option("--max-terms", cfg.max_terms, "hard cap on series terms");
  app->add_option("--format", raw.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--out", raw.out, "write records to this file instead of stdout");
  app->add_option("--seed", cfg.seed, "seed for randomized sampling");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neumann-type Bessel series over dihedral angles"};
  app.require_subcommand(1);

  RunConfig cfg;
  RawOptions raw;

  auto* eval = app.add_subcommand("eval", "evaluate F_{n,k}(R, xi) by one or more routes");
  add_common(eval, raw, cfg);
  eval->add_option("--routes,--route", raw.routes, "direct, closed_n1, closed_n2, integral_n4, horn_phi2");

  auto* verify = app.add_subcommand("verify", "run identity suites over parameter grids");
  add_common(verify, raw, cfg);
  verify->add_option("--suite,--suites", raw.suites, "suite names, or all");
  verify->add_option("--Nmax", cfg.N_max, "largest degree N for idgeg");
  verify->add_option("--jmax", cfg.j_max, "largest degree j for ir1 and dilcher");
  verify->add_option("--Mmax", cfg.M_max, "largest degree M for corollary");

  auto* table = app.add_subcommand("table", "tabulate F_{n,k} for a single route");
  add_common(table, raw, cfg);
  table->add_option("--routes,--route", raw.routes, "route to tabulate (default direct)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::domain_error;
  }

  try {
    cfg.command = eval->parsed() ? Command::eval : verify->parsed() ? Command::verify : Command::table;
    if (!raw.n.empty()) cfg.n = parse_int_range(join(raw.n));
    if (!raw.k.empty()) cfg.k = parse_real_range(join(raw.k));
    if (!raw.R.empty()) cfg.R = parse_real_range(join(raw.R));
    if (!raw.xi.empty()) cfg.xi = parse_real_range(join(raw.xi));
    if (!raw.routes.empty()) cfg.routes = parse_routes(join(raw.routes));
    if (!raw.suites.empty()) {
      cfg.suites.clear();
      for (const auto& token : raw.suites) {
        std::size_t start = 0;
        while (start <= token.size()) {
          const auto comma = token.find(',', start);
          cfg.suites.push_back(token.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      }
    }
    cfg.format = raw.format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (!raw.out.empty()) cfg.output_path = raw.out;
  } catch (const dihedral::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return exit_code::domain_error;
  }

  return run(cfg, std::cout, std::cerr);
}
