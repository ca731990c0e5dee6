#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include "seicp/linalg.hpp"
#include "seicp/sym_matrix.hpp"

namespace seicp {

/// The compact convex set {x : x^T B x <= 1, x >= 0} for SPD B, with the
/// eigendecomposition of B cached for ellipsoid projections.
class EllConeSet {
 public:
  explicit EllConeSet(const SymMatrix& b);
  EllConeSet(const SymMatrix& b, SpdCertificate cert);

  std::size_t size() const noexcept { return b_.size(); }
  const SymMatrix& matrix() const noexcept { return b_; }
  const SpdCertificate& certificate() const noexcept { return cert_; }
  const SymEigen& eigen() const noexcept { return eig_; }
  /// Spectral radius of B.
  double rho() const noexcept { return eig_.values.back(); }

 private:
  SymMatrix b_;
  SpdCertificate cert_;
  SymEigen eig_;
};

struct EllipsoidProjection {
  Vector x;
  double multiplier = 0.0;  ///< mu with x = (I + mu B)^-1 y; 0 for interior points
  int iterations = 0;
};

/// argmin ||x - y|| subject to x^T B x <= 1. Boundary cases solve the secular
/// equation x(mu)^T B x(mu) = 1 by safeguarded Newton in the eigenbasis of B.
EllipsoidProjection project_ellipsoid(std::span<const double> y, const SymMatrix& b,
                                      const SymEigen& eig_b);
EllipsoidProjection project_ellipsoid(std::span<const double> y, const EllConeSet& set);

struct DykstraResult {
  Vector x;
  double residual = 0.0;  ///< distance between the last ellipsoid and orthant iterates
  int alternations = 0;
  bool converged = false;
};

/// Projection onto the ellipsoid/orthant intersection by Dykstra alternation.
DykstraResult project_ellcone(std::span<const double> v, const EllConeSet& set, double tol,
                              int max_alternations = 500);

struct QpkOptions {
  double tol = 1e-8;
  int maxit = 5000;
  /// Also evaluate the fixed-point residual ||x - P(x - c / rho(B))|| with the
  /// Dykstra projection. Off inside DCA loops.
  bool certify = false;
  int dykstra_cap = 500;
};

struct QpkResult {
  Vector x;
  double objective = 0.0;
  double residual = 0.0;     ///< scaled projected-gradient residual of the iteration
  double certificate = -1.0; ///< Dykstra fixed-point residual, -1 when not requested
  int iterations = 0;
  bool converged = false;
};

/// min <c, x> subject to x^T B x <= 1, x >= 0.
///
/// Runs accelerated projected gradient (step 1/rho(B), momentum with
/// function-value restart) on the conic form min 1/2 u^T B u + <c, u>, u >= 0,
/// whose minimizer u* is a positive multiple of the solution:
/// x* = u* / sqrt(u*^T B u*), or 0 when u* = 0. The result is clamped to be
/// feasible. A non-converged result carries the best iterate.
QpkResult solve_qpk(std::span<const double> c, const EllConeSet& set,
                    std::span<const double> start, const QpkOptions& opts = {});

/// ||x - P(x - c / rho(B))|| with P the Dykstra projection onto the set.
double qpk_certificate(std::span<const double> c, const EllConeSet& set,
                       std::span<const double> x, double dykstra_tol, int dykstra_cap = 500);

}  // namespace seicp
