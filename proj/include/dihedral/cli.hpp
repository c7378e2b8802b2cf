#pragma once

// Library side of the `dihedral` command-line tool: grid parsing, record
// emission and the eval / verify / table commands.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dihedral/series_eval.hpp"

namespace dihedral::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int identity_failure = 1;
inline constexpr int domain_error = 2;
inline constexpr int numeric_failure = 3;  // truncation or quadrature
}  // namespace exit_code

enum class Command { eval, verify, table };
enum class OutputFormat { csv, json };

struct RunConfig {
  Command command = Command::eval;
  // Unset ranges take command-specific defaults.
  std::optional<std::vector<int>> n;
  std::optional<std::vector<double>> k;
  std::optional<std::vector<double>> R;
  std::optional<std::vector<double>> xi;
  std::vector<Route> routes;  // eval: empty means every applicable route
  std::vector<std::string> suites{"all"};
  int N_max = 15;
  int j_max = 8;
  int M_max = 5;
  double tol = 1e-15;
  std::size_t max_terms = 10'000;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output_path;
  std::uint64_t seed = 20240101;
};

/// Arithmetic on numbers and `pi`: "2pi/3", "pi/8", "0.25", "-1".
double parse_real_expr(std::string_view text);

/// Comma-separated items, each `a`, `a..b` or `a..b step s` (inclusive, step 1 by default).
std::vector<double> parse_real_range(std::string_view text);
std::vector<int> parse_int_range(std::string_view text);

/// Route list such as "direct,closed_n2".
std::vector<Route> parse_routes(std::string_view text);

using Field = std::variant<std::string, double, long long, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Field>> rows;
};

/// CSV with a header row, or a JSON array of flat objects. Reals use 17
/// significant digits.
void write_table(std::ostream& out, const Table& table, OutputFormat format);

/// Formats a real with 17 significant digits.
std::string format_real(double x);

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Runs the configured command, writing records to cfg.output_path or `out`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Names accepted by `verify --suite`.
const std::vector<std::string>& suite_names();

}  // namespace dihedral::cli
