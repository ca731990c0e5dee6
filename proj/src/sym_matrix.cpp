#include "seicp/sym_matrix.hpp"

#include <cmath>
#include <string>

#include "seicp/error.hpp"
#include "seicp/kernels.hpp"

namespace seicp {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::Io: return "Io";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::InvalidProblem: return "InvalidProblem";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::DegenerateIterate: return "DegenerateIterate";
    case ErrorKind::NoDirection: return "NoDirection";
    case ErrorKind::ReductionViolation: return "ReductionViolation";
    case ErrorKind::InfeasibleIterate: return "InfeasibleIterate";
  }
  return "Error";
}

SymMatrix::SymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {
  if (n == 0) throw Error(ErrorKind::InvalidMatrix, "dimension must be positive");
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
  return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
  SymMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

SymMatrix SymMatrix::from_dense(std::size_t n, std::span<const double> rowmajor,
                                bool symmetrize) {
  if (rowmajor.size() != n * n)
    throw Error(ErrorKind::InvalidMatrix, "buffer size does not match n*n");
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double a = rowmajor[i * n + j];
      const double b = rowmajor[j * n + i];
      if (!std::isfinite(a) || !std::isfinite(b))
        throw Error(ErrorKind::InvalidMatrix, "non-finite entry at (" + std::to_string(i + 1) +
                                                  "," + std::to_string(j + 1) + ")");
      if (a != b && !symmetrize)
        throw Error(ErrorKind::InvalidMatrix, "matrix is not symmetric at (" +
                                                  std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + ")");
      const double v = (a == b) ? a : 0.5 * (a + b);
      m.data_[i * n + j] = v;
      m.data_[j * n + i] = v;
    }
  }
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows, bool symmetrize) {
  const std::size_t n = rows.size();
  std::vector<double> buf;
  buf.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorKind::InvalidMatrix, "matrix is not square");
    buf.insert(buf.end(), r.begin(), r.end());
  }
  return from_dense(n, buf, symmetrize);
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) {
  if (!std::isfinite(v)) throw Error(ErrorKind::InvalidMatrix, "non-finite entry");
  data_[i * n_ + j] = v;
  data_[j * n_ + i] = v;
}

SymMatrix SymMatrix::plus_scaled(double alpha, const SymMatrix& other) const {
  if (other.n_ != n_) throw Error(ErrorKind::InvalidMatrix, "dimension mismatch");
  SymMatrix m(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += alpha * other.data_[k];
  return m;
}

SymMatrix SymMatrix::scaled(double alpha) const {
  SymMatrix m(*this);
  for (auto& v : m.data_) v *= alpha;
  return m;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

Vector SymMatrix::diag() const {
  Vector d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = data_[i * n_ + i];
  return d;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double norm_inf(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

Vector symv(const SymMatrix& a, std::span<const double> x) {
  Vector y(a.size());
  kernels::gemv(a.size(), a.data(), x, y);
  return y;
}

double quad_form(const SymMatrix& a, std::span<const double> x) {
  return dot(x, symv(a, x));
}

double bilinear(const SymMatrix& a, std::span<const double> x, std::span<const double> y) {
  return dot(x, symv(a, y));
}

Vector axpy(double alpha, std::span<const double> x, std::span<const double> y) {
  Vector r(y.begin(), y.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += alpha * x[i];
  return r;
}

Vector subtract(std::span<const double> a, std::span<const double> b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scaled(double alpha, std::span<const double> x) {
  Vector r(x.begin(), x.end());
  for (auto& v : r) v *= alpha;
  return r;
}

}  // namespace seicp
