#pragma once

#include <functional>
#include <optional>
#include <span>

#include "seicp/sym_matrix.hpp"

namespace seicp {

/// Convex surrogate minimized at each DCA step of the logarithmic model:
///   phi(x) = eta/2 ||x||^2 - ln(x^T A x) - <x, grad h(x^k)>,
///   grad h(x^k) = eta x^k - 2 B x^k / <x^k, B x^k>.
/// Holds references; A and B must outlive the objective.
class LnpkObjective {
 public:
  LnpkObjective(const SymMatrix& a, const SymMatrix& b, double eta, std::span<const double> xk);

  double eta() const noexcept { return eta_; }
  std::span<const double> linearization_point() const noexcept { return xk_; }
  std::span<const double> grad_h_at_xk() const noexcept { return grad_h_; }
  std::size_t size() const noexcept { return xk_.size(); }

  double value(std::span<const double> y) const;
  /// eta (y - x^k) - 2 A y / <y, A y> + 2 B x^k / <x^k, B x^k>.
  /// Throws DegenerateIterate for y = 0.
  Vector gradient(std::span<const double> y) const;

 private:
  const SymMatrix& a_;
  double eta_;
  Vector xk_;
  Vector grad_h_;
};

Vector grad_phi(const LnpkObjective& obj, std::span<const double> y);

struct StepsizePolicy {
  enum class Kind { Constant, Backtracking };
  Kind kind = Kind::Constant;
  double lipschitz = 1.0;  ///< Constant: fixed L
  double initial = 1.0;    ///< Backtracking: s
  double factor = 2.0;     ///< Backtracking: r > 1

  static StepsizePolicy constant(double l) { return {Kind::Constant, l, l, 2.0}; }
  static StepsizePolicy backtracking(double s, double r) { return {Kind::Backtracking, s, s, r}; }
};

struct FistaOptions {
  double tol = 1e-6;
  int maxit = 20000;
  /// Starting point; defaults to the linearization point x^k.
  std::optional<Vector> start;
  /// Called with (i, phi(u^i)) after every iteration when set.
  std::function<void(int, double)> on_iterate;
};

struct FistaResult {
  Vector u;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  double final_lipschitz = 0.0;
  int max_backtracks = 0;  ///< most L enlargements within one iteration
  int restarts = 0;
};

/// FISTA over the unit simplex. Stops when ||u^{i+1} - u^i|| / (1 + ||u^{i+1}||)
/// <= tol. The returned point never has a larger phi than the start.
FistaResult fista_solve(const LnpkObjective& obj, const StepsizePolicy& policy,
                        const FistaOptions& opts = {});

/// t_{i+1} = (1 + sqrt(1 + 4 t_i^2)) / 2.
double fista_momentum_next(double t);

}  // namespace seicp
