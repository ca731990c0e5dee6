#include "seicp/datasets.hpp"

#include <algorithm>
#include <cmath>

#include "seicp/error.hpp"

namespace seicp {

SeicpPair gen_randeicp(double lo, double hi, std::size_t n, Rng& rng) {
  if (!(lo < hi)) throw Error(ErrorKind::InvalidConfig, "interval must satisfy lo < hi");
  if (n == 0) throw Error(ErrorKind::InvalidConfig, "size must be positive");
  Vector dense(n * n);
  for (auto& v : dense) v = rng.uniform(lo, hi);
  return {SymMatrix::from_dense(n, dense, /*symmetrize=*/true), SymMatrix::identity(n)};
}

SqeicpProblem gen_randqeicp(double density, std::size_t n, Rng& rng) {
  if (!(density > 0.0 && density <= 1.0))
    throw Error(ErrorKind::InvalidConfig, "density must lie in (0, 1]");
  if (n == 0) throw Error(ErrorKind::InvalidConfig, "size must be positive");

  SymMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (rng.uniform() < density) b.set(i, j, rng.uniform(-1.0, 1.0));

  SymMatrix neg_c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (rng.uniform() < density) neg_c.set(i, j, rng.uniform());
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) row += std::abs(neg_c(i, j));
    // Dominance margin in [1, 2) keeps -C well conditioned on sparse rows.
    neg_c.set(i, i, row + 1.0 + rng.uniform());
    peak = std::max(peak, neg_c(i, i));
  }
  SymMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) c.set(i, j, -neg_c(i, j) / peak);
  return SqeicpProblem(SymMatrix::identity(n), std::move(b), std::move(c));
}

Vector random_start(std::size_t n, Rng& rng) {
  Vector x(n);
  for (auto& v : x) v = rng.uniform();
  return x;
}

}  // namespace seicp
