#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "dihedral/cli.hpp"
#include "dihedral/errors.hpp"

namespace dihedral::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// expr   := term (('+' | '-') term)*
// term   := factor (('*' | '/') factor | factor)*     juxtaposition multiplies
// factor := ('-' | '+') factor | number | "pi" | '(' expr ')'
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  double parse() {
    const double v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail();
    return v;
  }

 private:
  [[noreturn]] void fail() const { throw DomainError("cannot parse number: '" + std::string(text_) + "'"); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'p';
  }

  double expr() {
    double v = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      v = (c == '+') ? v + term() : v - term();
    }
    return v;
  }

  double term() {
    double v = factor();
    while (true) {
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        v = (c == '*') ? v * factor() : v / factor();
      } else if (starts_factor()) {
        v *= factor();
      } else {
        return v;
      }
    }
  }

  double factor() {
    const char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      return c == '-' ? -factor() : factor();
    }
    if (c == '(') {
      ++pos_;
      const double v = expr();
      if (peek() != ')') fail();
      ++pos_;
      return v;
    }
    if (text_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return std::numbers::pi;
    }
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    // Stop before an exponent-free 'p' so "2pi" parses as 2 * pi.
    double v = 0.0;
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr == begin) fail();
    pos_ += static_cast<std::size_t>(res.ptr - begin);
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class F>
void for_each_item(std::string_view text, F&& f) {
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (item.empty()) throw DomainError("empty item in list: '" + std::string(text) + "'");
    f(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
}

}  // namespace

double parse_real_expr(std::string_view text) { return ExprParser(trim(text)).parse(); }

std::vector<double> parse_real_range(std::string_view text) {
  std::vector<double> values;
  for_each_item(text, [&](std::string_view item) {
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      values.push_back(parse_real_expr(item));
      return;
    }
    const double start = parse_real_expr(item.substr(0, dots));
    std::string_view rest = item.substr(dots + 2);
    double step = 1.0;
    const std::size_t kw = rest.find("step");
    if (kw != std::string_view::npos) {
      step = parse_real_expr(rest.substr(kw + 4));
      rest = rest.substr(0, kw);
    }
    const double end = parse_real_expr(rest);
    if (!(step > 0.0)) throw DomainError("range step must be positive");
    if (end < start) throw DomainError("range end precedes its start");
    const auto count = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      double v = start + static_cast<double>(i) * step;
      // Land exactly on the endpoint when the step divides the span.
      if (std::fabs(v - end) <= 1e-9 * step) v = end;
      values.push_back(v);
    }
  });
  return values;
}

std::vector<int> parse_int_range(std::string_view text) {
  std::vector<int> out;
  for (const double v : parse_real_range(text)) {
    if (v != std::floor(v)) throw DomainError("expected an integer, got " + format_real(v));
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<Route> parse_routes(std::string_view text) {
  std::vector<Route> routes;
  for_each_item(text, [&](std::string_view item) {
    const auto r = parse_route(item);
    if (!r) throw DomainError("unknown route '" + std::string(item) + "'");
    routes.push_back(*r);
  });
  return routes;
}

}  // namespace dihedral::cli
