#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "dihedral/cli.hpp"

namespace dihedral::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_field(const Field& f) {
  if (const auto* s = std::get_if<std::string>(&f)) return csv_escape(*s);
  if (const auto* d = std::get_if<double>(&f)) return format_real(*d);
  if (const auto* i = std::get_if<long long>(&f)) return std::to_string(*i);
  return std::get<bool>(f) ? "true" : "false";
}

std::string json_field(const Field& f) {
  if (const auto* s = std::get_if<std::string>(&f)) return nlohmann::json(*s).dump();
  if (const auto* d = std::get_if<double>(&f)) return std::isfinite(*d) ? format_real(*d) : "null";
  if (const auto* i = std::get_if<long long>(&f)) return std::to_string(*i);
  return std::get<bool>(f) ? "true" : "false";
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_table(std::ostream& out, const Table& table, OutputFormat format) {
  if (format == OutputFormat::csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << csv_escape(table.columns[c]);
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
      out << '\n';
    }
    return;
  }
  out << '[';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n" : "\n") << "  {";
    const auto& row = table.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? ", " : "") << nlohmann::json(table.columns[c]).dump() << ": " << json_field(row[c]);
    }
    out << '}';
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
}

}  // namespace dihedral::cli
