#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "seicp/sym_matrix.hpp"

namespace seicp {

/// Cholesky factor of an SPD matrix: M = L L^T, diag(L) > 0.
class SpdCertificate {
 public:
  SpdCertificate(std::size_t n, std::vector<double> lower);

  std::size_t size() const noexcept { return n_; }
  /// Row-major lower-triangular factor; strictly upper part is zero.
  std::span<const double> factor() const noexcept { return l_; }
  double l(std::size_t i, std::size_t j) const noexcept { return l_[i * n_ + j]; }
  double min_diagonal() const noexcept { return min_diag_; }

  /// Solves L y = b.
  Vector solve_lower(std::span<const double> b) const;
  /// Solves L^T y = b.
  Vector solve_upper(std::span<const double> b) const;
  /// Solves M y = b.
  Vector solve(std::span<const double> b) const;

 private:
  std::size_t n_;
  std::vector<double> l_;
  double min_diag_;
};

/// Failed factorization; `pivot` is the 1-based index of the first
/// non-positive pivot.
struct NotSpd {
  std::size_t pivot;
};

using CholeskyResult = std::variant<SpdCertificate, NotSpd>;

CholeskyResult cholesky(const SymMatrix& m);
bool is_spd(const SymMatrix& m);
/// Factorizes or throws Error(InvalidProblem) naming `what`.
SpdCertificate require_spd(const SymMatrix& m, const char* what);

struct SymEigen {
  Vector values;               ///< ascending
  std::vector<double> vectors; ///< row-major n*n, column j pairs with values[j]
  int sweeps = 0;

  std::size_t size() const noexcept { return values.size(); }
  double vec(std::size_t row, std::size_t col) const { return vectors[row * values.size() + col]; }
  Vector column(std::size_t j) const;
};

inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi eigensolver. Stops once the off-diagonal Frobenius norm falls
/// to 1e-12 * ||M||_F; throws EigenFailure after kJacobiMaxSweeps sweeps.
SymEigen sym_eigen(const SymMatrix& m, bool want_vectors = true);

/// Smallest eigenvalue of the pencil (G, D) with D = L L^T, i.e. the smallest
/// eigenvalue of L^-1 G L^-T.
double gen_eigen_min(const SymMatrix& g, const SpdCertificate& d);

/// Spectral condition number of an SPD matrix from its eigenvalues.
double condition_number(const SymEigen& eig);

}  // namespace seicp
