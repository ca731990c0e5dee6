#pragma once

#include <cstdint>
#include <span>

#include "seicp/ellcone.hpp"
#include "seicp/model.hpp"

namespace seicp {

struct QpConfig {
  double eps = 1e-6;
  int maxit = 10000;
  bool line_search = true;
  double active_tol = 1e-10;
  QpkOptions subsolver{};
  /// Seeds the zero-iterate fallback.
  std::uint64_t seed = 0;
  bool keep_trace = true;
};

/// -x^T A x with the shifted A.
double qp_objective(const SeicpProblem& p, std::span<const double> x);

/// Largest step keeping z + alpha d inside {x^T B x <= 1, x >= 0}.
/// Throws InfeasibleIterate when the ellipsoid discriminant is negative
/// beyond -1e-12, NoDirection for d = 0.
double alpha_bar_qp(const SeicpProblem& p, std::span<const double> z, std::span<const double> d);

/// DCA / BDCA on the quadratic model. x0 is clamped to the orthant and scaled
/// onto the ellipsoid boundary.
SolveReport solve_qp(const SeicpProblem& p, std::span<const double> x0, const QpConfig& cfg,
                     Algorithm algo);

}  // namespace seicp
