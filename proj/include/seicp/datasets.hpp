#pragma once

#include <cstddef>

#include "seicp/rng.hpp"
#include "seicp/sqeicp.hpp"
#include "seicp/sym_matrix.hpp"

namespace seicp {

struct SeicpPair {
  SymMatrix a;
  SymMatrix b;
};

/// RANDEICP(lo, hi, n): A with i.i.d. U[lo, hi] entries, symmetrized as
/// (A + A^T) / 2; B = I. Unshifted.
SeicpPair gen_randeicp(double lo, double hi, std::size_t n, Rng& rng);

/// RANDQEICP(density, n): A = I; B sparse symmetric with U[-1, 1] values;
/// -C sparse, nonnegative off-diagonal U[0, 1], diagonal = absolute row sum
/// + U[1, 2), then scaled so its largest entry is 1.
SqeicpProblem gen_randqeicp(double density, std::size_t n, Rng& rng);

/// Uniform [0, 1)^n.
Vector random_start(std::size_t n, Rng& rng);

}  // namespace seicp
