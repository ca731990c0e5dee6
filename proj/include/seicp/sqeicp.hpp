#pragma once

#include <span>

#include "seicp/linalg.hpp"
#include "seicp/model.hpp"
#include "seicp/sym_matrix.hpp"

namespace seicp {

/// SQEiCP(A, B, C): w = lambda^2 A x + lambda B x + C x, x >= 0, w >= 0, x^T w = 0.
/// Requires A SPD and -C SPD.
class SqeicpProblem {
 public:
  SqeicpProblem(SymMatrix a, SymMatrix b, SymMatrix c);

  const SymMatrix& a() const noexcept { return a_; }
  const SymMatrix& b() const noexcept { return b_; }
  const SymMatrix& c() const noexcept { return c_; }
  std::size_t size() const noexcept { return a_.size(); }
  const SpdCertificate& spd_a() const noexcept { return spd_a_; }
  const SpdCertificate& spd_neg_c() const noexcept { return spd_neg_c_; }

 private:
  SymMatrix a_, b_, c_;
  SpdCertificate spd_a_;
  SpdCertificate spd_neg_c_;
};

enum class Branch { Positive, Negative };
const char* to_string(Branch b);

struct AugmentedSeicp {
  Branch branch = Branch::Positive;
  SymMatrix d;  ///< blockdiag(A, -C)
  SymMatrix m;  ///< [[-B, -C], [-C, 0]] or [[B, -C], [-C, 0]]
  SeicpProblem inner;
};

/// Assembles D and M for the branch and shifts M by the exact generalized
/// eigenvalue bound plus one.
AugmentedSeicp build_augmented(const SqeicpProblem& p, Branch branch);

/// Starting eigenvalue estimate from x0: the positive root of
/// (x0^T A x0) t^2 + (x0^T B x0) t + x0^T C x0 = 0, or the negative root.
double initial_lambda(const SqeicpProblem& p, std::span<const double> x0, Branch branch);

/// Length-2n start (lambda x0, x0) / (1 + lambda) for the positive branch,
/// (-lambda x0, x0) / (1 - lambda) with the negative root otherwise.
Vector initial_point_sqeicp(const SqeicpProblem& p, std::span<const double> x0, Branch branch);

struct SqeicpSolution {
  Branch branch = Branch::Positive;
  Vector x;              ///< quadratic eigenvector (1 + lambda) x
  double lambda_q = 0.0; ///< quadratic complementary eigenvalue
  double lambda_inner = 0.0;
  double split_residual = 0.0;  ///< ||y - lambda x|| / ||x||
  double v_residual = 0.0;      ///< ||C (y - lambda x)|| / (||C||_F ||x||)
  Vector w;
  double c = 0.0;
  double measure = 0.0;
};

/// SQEiCP feasibility with w = lambda^2 A x + lambda B x + C x.
Feasibility sqeicp_feasibility(const SqeicpProblem& p, std::span<const double> x, double lambda);

/// Maps an eigenpair of the shifted inner problem back to the SQEiCP.
/// Throws ReductionViolation when the un-shifted inner eigenvalue is not
/// positive or the eigenvector split violates y = lambda x beyond 1e-4.
SqeicpSolution map_back(const SqeicpProblem& p, const AugmentedSeicp& aug,
                        std::span<const double> z, double lambda_shifted);

}  // namespace seicp
