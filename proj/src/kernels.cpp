#include "seicp/kernels.hpp"

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seicp::kernels {

namespace serial {

void gemv(std::size_t n, std::span<const double> m, std::span<const double> x,
          std::span<double> y) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = m.data() + i * n;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

void lower_solve_columns(std::size_t n, std::span<const double> l, std::span<double> b) {
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = b[i * n + col];
      const double* li = l.data() + i * n;
      for (std::size_t k = 0; k < i; ++k) s -= li[k] * b[k * n + col];
      b[i * n + col] = s / li[i];
    }
  }
}

void transpose(std::size_t n, std::span<const double> m, std::span<double> out) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j * n + i] = m[i * n + j];
}

}  // namespace serial

namespace omp {

void gemv(std::size_t n, std::span<const double> m, std::span<const double> x,
          std::span<double> y) {
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    const double* row = m.data() + static_cast<std::size_t>(i) * n;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
    y[static_cast<std::size_t>(i)] = s;
  }
}

void lower_solve_columns(std::size_t n, std::span<const double> l, std::span<double> b) {
  const auto cols = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t c = 0; c < cols; ++c) {
    const auto col = static_cast<std::size_t>(c);
    for (std::size_t i = 0; i < n; ++i) {
      double s = b[i * n + col];
      const double* li = l.data() + i * n;
      for (std::size_t k = 0; k < i; ++k) s -= li[k] * b[k * n + col];
      b[i * n + col] = s / li[i];
    }
  }
}

void transpose(std::size_t n, std::span<const double> m, std::span<double> out) {
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    const auto r = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < n; ++j) out[j * n + r] = m[r * n + j];
  }
}

}  // namespace omp

namespace {
bool use_parallel(std::size_t n) { return n >= kParallelThreshold && max_threads() > 1; }
}  // namespace

void gemv(std::size_t n, std::span<const double> m, std::span<const double> x,
          std::span<double> y) {
  if (use_parallel(n))
    omp::gemv(n, m, x, y);
  else
    serial::gemv(n, m, x, y);
}

void lower_solve_columns(std::size_t n, std::span<const double> l, std::span<double> b) {
  if (use_parallel(n))
    omp::lower_solve_columns(n, l, b);
  else
    serial::lower_solve_columns(n, l, b);
}

void transpose(std::size_t n, std::span<const double> m, std::span<double> out) {
  if (use_parallel(n))
    omp::transpose(n, m, out);
  else
    serial::transpose(n, m, out);
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n < 1 ? 1 : n);
#else
  (void)n;
#endif
}

}  // namespace seicp::kernels
