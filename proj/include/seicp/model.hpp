#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <memory>

#include "seicp/ellcone.hpp"
#include "seicp/linalg.hpp"
#include "seicp/sym_matrix.hpp"

namespace seicp {

enum class ShiftMode { Exact, Bound };

struct ShiftOptions {
  ShiftMode mode = ShiftMode::Exact;
  double margin = 1.0;  ///< added on top of the smallest admissible shift
};

/// SEiCP(A, B) instance made SPD by the shift A <- A + mu B.
///
/// Keeps the original A so that eigenvalues and residuals can be reported
/// against the un-shifted problem; solvers work with shifted_a().
class SeicpProblem {
 public:
  const SymMatrix& original_a() const noexcept { return a_; }
  const SymMatrix& shifted_a() const noexcept { return a_shifted_; }
  const SymMatrix& b() const noexcept { return b_; }
  const SpdCertificate& spd_a() const noexcept { return spd_a_; }
  const SpdCertificate& spd_b() const noexcept { return spd_b_; }
  double shift() const noexcept { return mu_; }
  std::size_t size() const noexcept { return b_.size(); }
  double kappa_a() const noexcept { return kappa_a_; }
  double kappa_b() const noexcept { return kappa_b_; }
  /// Set for augmented problems built from an SQEiCP; selects the practical
  /// eta rule for that case.
  bool reduced_from_sqeicp() const noexcept { return reduced_; }
  /// Feasible set {x^T B x <= 1, x >= 0} of the quadratic model, shared
  /// read-only between solves.
  const EllConeSet& ellcone() const noexcept { return *ellcone_; }

  const std::string& id() const noexcept { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }

 private:
  friend SeicpProblem shift_to_spd(const SymMatrix&, const SymMatrix&, const ShiftOptions&, bool);
  SeicpProblem(SymMatrix a, SymMatrix a_shifted, SymMatrix b, SpdCertificate spd_a,
               SpdCertificate spd_b, double mu, bool reduced);

  SymMatrix a_;
  SymMatrix a_shifted_;
  SymMatrix b_;
  SpdCertificate spd_a_;
  SpdCertificate spd_b_;
  double mu_;
  double kappa_a_ = 1.0;
  double kappa_b_ = 1.0;
  bool reduced_ = false;
  std::shared_ptr<const EllConeSet> ellcone_;
  std::string id_;
};

/// Exact: mu = max(0, -lambda_min(A, B)) + margin.
/// Bound: mu = |lambda_min(A)| / lambda_min(B) + margin if lambda_min(A) < 0,
/// else 0. Throws InvalidProblem if B is not SPD.
SeicpProblem shift_to_spd(const SymMatrix& a, const SymMatrix& b, const ShiftOptions& opts = {},
                          bool reduced_from_sqeicp = false);

/// x^T A x / x^T B x with the shifted A. Throws DegenerateIterate for x = 0.
double rayleigh(const SeicpProblem& p, std::span<const double> x);

/// ||[x]_-|| + ||[w]_-|| + |w^T x|.
double complementarity_measure(std::span<const double> x, std::span<const double> w);
/// -log10(measure), capped at 16.
double exponent_from_measure(double measure);

struct Feasibility {
  double c = 0.0;
  double measure = 0.0;
  Vector w;
};

/// Feasibility exponent of (x, lambda) on the original SEiCP(A, B), with
/// w = lambda B x - A x and lambda already un-shifted.
Feasibility feasibility_exponent(const SeicpProblem& p, std::span<const double> x, double lambda);

enum class Formulation { Lnp, Qp };
enum class Algorithm { Dca, Bdca };

const char* to_string(Formulation f);
const char* to_string(Algorithm a);
std::optional<Formulation> parse_formulation(const std::string& s);
std::optional<Algorithm> parse_algorithm(const std::string& s);

struct TraceEntry {
  double objective = 0.0;  ///< objective at x^k
  double step = 0.0;       ///< ||d^k|| / (1 + ||z^k||)
  double alpha = 0.0;      ///< line-search step taken (0 if none)
};

struct SolveReport {
  Formulation model = Formulation::Lnp;
  Algorithm algo = Algorithm::Bdca;
  Vector x;
  double lambda = 0.0;          ///< complementary eigenvalue of the original problem
  double lambda_shifted = 0.0;  ///< eigenvalue of the shifted problem
  Vector w;
  double c = 0.0;
  double measure = 0.0;
  int iterations = 0;
  int line_searches = 0;  ///< iterations where a positive step was taken
  double eta = 0.0;       ///< lnp: regularization in effect at termination
  int eta_increases = 0;  ///< lnp: number of adaptive eta doublings
  bool converged = false;
  double cpu_seconds = 0.0;
  /// trace[k] describes iterate x^k; the last entry is the returned point.
  std::vector<TraceEntry> trace;
};

}  // namespace seicp
