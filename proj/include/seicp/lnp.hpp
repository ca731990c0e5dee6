#pragma once

#include <span>
#include <vector>

#include "seicp/fista.hpp"
#include "seicp/model.hpp"

namespace seicp {

struct EtaPolicy {
  enum class Kind {
    /// eta = n, or 2 max(kappa_A, kappa_B) on problems reduced from an SQEiCP.
    Practical,
    /// eta = 4 n max(kappa_A^2, kappa_B^2): both DC components strongly convex on the simplex.
    ConvexBound,
    Explicit,
  };
  Kind kind = Kind::Practical;
  double value = 0.0;

  static EtaPolicy practical() { return {Kind::Practical, 0.0}; }
  static EtaPolicy convex_bound() { return {Kind::ConvexBound, 0.0}; }
  static EtaPolicy explicit_value(double v) { return {Kind::Explicit, v}; }
};

struct EtaInfo {
  double eta = 0.0;
  double lipschitz_g = 0.0;  ///< eta + 2 n kappa_A
  double lipschitz_h = 0.0;  ///< eta + 2 n kappa_B
};

EtaInfo eta_value(const SeicpProblem& p, const EtaPolicy& policy);

struct LnpConfig {
  EtaPolicy eta = EtaPolicy::practical();
  double eps = 1e-8;
  int maxit = 10000;
  double active_tol = 1e-10;
  /// FISTA stepsize: constant L = eta, or backtracking from s = L_g / 100 with r = 2.
  bool fista_backtracking = false;
  /// Double eta and redo the step whenever a subproblem solution fails to
  /// converge or raises the objective by more than descent_slack; eta never
  /// exceeds the ConvexBound value.
  bool adaptive_eta = true;
  double descent_slack = 1e-12;
  double fista_tol = 1e-6;
  int fista_maxit = 20000;
  bool keep_trace = true;
};

/// ln(x^T B x) - ln(x^T A x) on the shifted problem; the minimization form of
/// the logarithmic model.
double lnp_objective(const SeicpProblem& p, std::span<const double> x);

/// DC components g(x) = eta/2 ||x||^2 - ln(x^T A x), h(x) = eta/2 ||x||^2 - ln(x^T B x).
Vector lnp_grad_g(const SeicpProblem& p, double eta, std::span<const double> x);
Vector lnp_grad_h(const SeicpProblem& p, double eta, std::span<const double> x);

struct LineSearchCandidates {
  double alpha_bar = 0.0;
  std::vector<double> roots;  ///< stationary points of q inside [0, alpha_bar]
  double a1 = 0, b1 = 0, c1 = 0, a2 = 0, b2 = 0, c2 = 0;
  double alpha = 0.0;         ///< selected step
  double q_alpha = 0.0;       ///< q(alpha)

  /// (a1 t^2 + b1 t + c1) / (a2 t^2 + b2 t + c2)
  double q(double t) const;
};

/// Exact minimization of lnp_objective(z + alpha d) over the feasible step
/// range [0, alpha_bar]. Candidates are 0, alpha_bar and the real roots of
/// the numerator of q' in range; ties go to the smaller step.
LineSearchCandidates exact_line_search_lnp(const SeicpProblem& p, std::span<const double> z,
                                           std::span<const double> d);

/// DCA / BDCA on the logarithmic model. x0 is projected onto the simplex first.
SolveReport solve_lnp(const SeicpProblem& p, std::span<const double> x0, const LnpConfig& cfg,
                      Algorithm algo);

/// Active set inclusion A(z) subset of A(x), with A(v) = {i : v_i <= tol}.
bool active_set_included(std::span<const double> z, std::span<const double> x, double tol);

}  // namespace seicp
