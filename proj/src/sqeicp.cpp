#include "seicp/sqeicp.hpp"

#include <cmath>
#include <sstream>

#include "seicp/error.hpp"

namespace seicp {

namespace {

SpdCertificate check_square(const SymMatrix& m, std::size_t n, const char* what) {
  if (m.size() != n) throw Error(ErrorKind::InvalidProblem, std::string(what) + " size mismatch");
  return require_spd(m, what);
}

}  // namespace

SqeicpProblem::SqeicpProblem(SymMatrix a, SymMatrix b, SymMatrix c)
    : a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      spd_a_(check_square(a_, a_.size(), "A")),
      spd_neg_c_(check_square(c_.scaled(-1.0), a_.size(), "-C")) {
  if (b_.size() != a_.size()) throw Error(ErrorKind::InvalidProblem, "B size mismatch");
}

const char* to_string(Branch b) { return b == Branch::Positive ? "g" : "h"; }

AugmentedSeicp build_augmented(const SqeicpProblem& p, Branch branch) {
  const std::size_t n = p.size();
  SymMatrix d(2 * n), m(2 * n);
  const double sign_b = branch == Branch::Positive ? -1.0 : 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      d.set(i, j, p.a()(i, j));
      d.set(n + i, n + j, -p.c()(i, j));
      m.set(i, j, sign_b * p.b()(i, j));
    }
    for (std::size_t j = 0; j < n; ++j) m.set(n + i, j, -p.c()(i, j));
  }
  auto inner = shift_to_spd(m, d, ShiftOptions{ShiftMode::Exact, 1.0}, true);
  return AugmentedSeicp{branch, std::move(d), std::move(m), std::move(inner)};
}

double initial_lambda(const SqeicpProblem& p, std::span<const double> x0, Branch branch) {
  if (norm_inf(x0) == 0.0) throw Error(ErrorKind::DegenerateIterate, "x0 must be nonzero");
  for (double v : x0)
    if (v < 0.0) throw Error(ErrorKind::InvalidInput, "x0 must be nonnegative");
  const double xax = quad_form(p.a(), x0);
  const double xbx = quad_form(p.b(), x0);
  const double xcx = quad_form(p.c(), x0);
  const double root = std::sqrt(xbx * xbx - 4.0 * xax * xcx);
  return branch == Branch::Positive ? (-xbx + root) / (2.0 * xax) : (-xbx - root) / (2.0 * xax);
}

Vector initial_point_sqeicp(const SqeicpProblem& p, std::span<const double> x0, Branch branch) {
  const std::size_t n = p.size();
  const double lam = initial_lambda(p, x0, branch);
  Vector z(2 * n);
  if (branch == Branch::Positive) {
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = lam * x0[i] / (1.0 + lam);
      z[n + i] = x0[i] / (1.0 + lam);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = -lam * x0[i] / (1.0 - lam);
      z[n + i] = x0[i] / (1.0 - lam);
    }
  }
  return z;
}

Feasibility sqeicp_feasibility(const SqeicpProblem& p, std::span<const double> x, double lambda) {
  Feasibility f;
  const Vector ax = symv(p.a(), x);
  const Vector bx = symv(p.b(), x);
  const Vector cx = symv(p.c(), x);
  f.w.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    f.w[i] = lambda * lambda * ax[i] + lambda * bx[i] + cx[i];
  f.measure = complementarity_measure(x, f.w);
  f.c = exponent_from_measure(f.measure);
  return f;
}

SqeicpSolution map_back(const SqeicpProblem& p, const AugmentedSeicp& aug,
                        std::span<const double> z, double lambda_shifted) {
  const std::size_t n = p.size();
  if (z.size() != 2 * n) throw Error(ErrorKind::InvalidInput, "inner vector has the wrong size");
  const double lam = lambda_shifted - aug.inner.shift();
  if (!(lam > 0.0)) {
    std::ostringstream os;
    os << "inner eigenvalue " << lam << " is not positive on branch " << to_string(aug.branch);
    throw Error(ErrorKind::ReductionViolation, os.str());
  }
  const std::span<const double> y = z.subspan(0, n);
  const std::span<const double> x = z.subspan(n, n);
  const double xn = norm2(x);
  if (!(xn > 0.0)) throw Error(ErrorKind::ReductionViolation, "x block of the inner vector is zero");

  Vector gap(n);
  for (std::size_t i = 0; i < n; ++i) gap[i] = y[i] - lam * x[i];
  SqeicpSolution s;
  s.branch = aug.branch;
  s.lambda_inner = lam;
  s.split_residual = norm2(gap) / xn;
  s.v_residual = norm2(symv(p.c(), gap)) / (p.c().frobenius_norm() * xn);
  if (s.split_residual > 1e-4) {
    std::ostringstream os;
    os << "split residual ||y - lambda x|| / ||x|| = " << s.split_residual << " exceeds 1e-4";
    throw Error(ErrorKind::ReductionViolation, os.str());
  }
  s.lambda_q = aug.branch == Branch::Positive ? lam : -lam;
  s.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.x[i] = (1.0 + lam) * x[i];
  auto f = sqeicp_feasibility(p, s.x, s.lambda_q);
  s.w = std::move(f.w);
  s.c = f.c;
  s.measure = f.measure;
  return s;
}

}  // namespace seicp
