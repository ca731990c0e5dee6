#pragma once

#include <cstddef>
#include <span>

#include "seicp/sym_matrix.hpp"

namespace seicp {

/// Work counters for one projection, used by complexity tests.
struct ProjectionStats {
  std::size_t comparisons = 0;
  std::size_t scans = 0;
};

/// Euclidean projection onto the unit simplex {x : sum(x) = 1, x >= 0} by the
/// sort-and-threshold method. Ties in the sort keep index order.
Vector project_simplex(std::span<const double> v, ProjectionStats* stats = nullptr);

/// True when x >= 0 and |sum(x) - 1| <= 1e-12 * n.
bool on_simplex(std::span<const double> x);

}  // namespace seicp
