#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace seicp {

using Vector = std::vector<double>;

/// Dense real symmetric matrix, row-major full storage.
///
/// Both triangles are stored and kept bitwise equal; set() writes the mirror
/// entry as well. All entries are finite and n >= 1.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n);

  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(std::span<const double> diag);
  /// Builds from a row-major n*n buffer. Asymmetric input is averaged with its
  /// transpose when `symmetrize` is set, otherwise rejected.
  static SymMatrix from_dense(std::size_t n, std::span<const double> rowmajor,
                              bool symmetrize = false);
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows,
                             bool symmetrize = false);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v);

  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * n_, n_};
  }
  std::span<const double> data() const noexcept { return data_; }

  /// this + alpha * other
  SymMatrix plus_scaled(double alpha, const SymMatrix& other) const;
  SymMatrix scaled(double alpha) const;
  double frobenius_norm() const;
  Vector diag() const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double norm_inf(std::span<const double> a);
/// y = A x
Vector symv(const SymMatrix& a, std::span<const double> x);
/// x^T A x
double quad_form(const SymMatrix& a, std::span<const double> x);
/// x^T A y
double bilinear(const SymMatrix& a, std::span<const double> x, std::span<const double> y);
Vector axpy(double alpha, std::span<const double> x, std::span<const double> y);
Vector subtract(std::span<const double> a, std::span<const double> b);
Vector scaled(double alpha, std::span<const double> x);

}  // namespace seicp
