#pragma once

#include <cstddef>

#include "dihedral/errors.hpp"

namespace dihedral {

/// Stopping rule shared by every infinite-series evaluation.
///
/// A series stops once its bound on the neglected tail falls below
/// `tol * |partial sum|`; reaching `max_terms` first raises TruncationError.
struct Truncation {
  double tol = 1e-15;
  std::size_t max_terms = 10'000;

  void validate() const {
    if (!(tol > 0.0)) throw DomainError("Truncation: tol must be positive");
    if (max_terms < 1) throw DomainError("Truncation: max_terms must be >= 1");
  }
};

/// What a truncated evaluation actually achieved.
struct TruncationReport {
  std::size_t terms_used = 0;
  double tail_bound = 0.0;  // absolute bound on the neglected tail
};

/// A series value with its truncation report.
struct SeriesValue {
  double value = 0.0;
  TruncationReport report;
};

}  // namespace dihedral
