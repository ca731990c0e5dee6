#pragma once

// Dense kernels in two flavours: a plain serial reference and an OpenMP
// version parallel over rows/columns. Every parallel loop writes disjoint
// outputs and keeps the per-output summation order of the serial kernel, so
// both flavours produce bitwise identical results.

#include <cstddef>
#include <span>

namespace seicp::kernels {

/// Below this order the dispatching wrappers stay serial.
inline constexpr std::size_t kParallelThreshold = 192;

namespace serial {

/// y = M x, M row-major n*n.
void gemv(std::size_t n, std::span<const double> m, std::span<const double> x,
          std::span<double> y);

/// Solves L X = B in place for all n columns of B (row-major n*n), L lower
/// triangular row-major.
void lower_solve_columns(std::size_t n, std::span<const double> l, std::span<double> b);

/// out = M^T, row-major n*n.
void transpose(std::size_t n, std::span<const double> m, std::span<double> out);

}  // namespace serial

namespace omp {

void gemv(std::size_t n, std::span<const double> m, std::span<const double> x,
          std::span<double> y);
void lower_solve_columns(std::size_t n, std::span<const double> l, std::span<double> b);
void transpose(std::size_t n, std::span<const double> m, std::span<double> out);

}  // namespace omp

void gemv(std::size_t n, std::span<const double> m, std::span<const double> x,
          std::span<double> y);
void lower_solve_columns(std::size_t n, std::span<const double> l, std::span<double> b);
void transpose(std::size_t n, std::span<const double> m, std::span<double> out);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();
/// Caps the OpenMP team size for subsequent parallel kernels on this thread.
void set_threads(int n);

}  // namespace seicp::kernels
