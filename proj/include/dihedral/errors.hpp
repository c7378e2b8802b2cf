#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dihedral {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An infinite series hit its term cap before the tail bound met tolerance.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, std::size_t terms, double tail_bound)
      : std::runtime_error(what), terms_(terms), tail_bound_(tail_bound) {}

  std::size_t terms() const noexcept { return terms_; }
  double tail_bound() const noexcept { return tail_bound_; }

 private:
  std::size_t terms_;
  double tail_bound_;
};

/// Quadrature could not reach the requested accuracy at maximal refinement.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured combinatorial cap.
class CombinatorialSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace dihedral
