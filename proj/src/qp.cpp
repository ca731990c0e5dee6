#include "seicp/qp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "seicp/error.hpp"
#include "seicp/lnp.hpp"
#include "seicp/rng.hpp"

namespace seicp {

double qp_objective(const SeicpProblem& p, std::span<const double> x) {
  return -quad_form(p.shifted_a(), x);
}

double alpha_bar_qp(const SeicpProblem& p, std::span<const double> z, std::span<const double> d) {
  if (norm_inf(d) == 0.0) throw Error(ErrorKind::NoDirection, "step bound along d = 0");
  const Vector bd = symv(p.b(), d);
  const double dbd = dot(d, bd);
  const double zbd = dot(z, bd);
  const double zbz = quad_form(p.b(), z);
  double disc = zbd * zbd - dbd * (zbz - 1.0);
  if (disc < 0.0) {
    if (disc < -1e-12) throw Error(ErrorKind::InfeasibleIterate, "iterate outside the ellipsoid");
    disc = 0.0;
  }
  double alpha = std::max((-zbd + std::sqrt(disc)) / dbd, 0.0);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] < 0.0) alpha = std::min(alpha, std::max(-z[i] / d[i], 0.0));
  return alpha;
}

namespace {

Vector onto_boundary(const SymMatrix& b, Vector x) {
  const double q = quad_form(b, x);
  const double s = 1.0 / std::sqrt(q);
  for (auto& v : x) v *= s;
  return x;
}

}  // namespace

SolveReport solve_qp(const SeicpProblem& p, std::span<const double> x0, const QpConfig& cfg,
                     Algorithm algo) {
  if (!(cfg.eps > 0.0)) throw Error(ErrorKind::InvalidConfig, "eps must be positive");
  if (x0.size() != p.size()) throw Error(ErrorKind::InvalidInput, "x0 has the wrong size");
  const auto t0 = std::chrono::steady_clock::now();

  const SymMatrix& a = p.shifted_a();
  const SymMatrix& b = p.b();
  const EllConeSet& set = p.ellcone();
  Rng rng(cfg.seed, 0x51);

  Vector x(x0.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::max(x0[i], 0.0);
  if (norm_inf(x) == 0.0) throw Error(ErrorKind::DegenerateIterate, "x0 must be nonzero");
  x = onto_boundary(b, std::move(x));

  SolveReport rep;
  rep.model = Formulation::Qp;
  rep.algo = algo;
  if (cfg.keep_trace) rep.trace.push_back({qp_objective(p, x), 0.0, 0.0});

  int k = 0;
  for (; k < cfg.maxit; ++k) {
    Vector z;
    if (norm_inf(x) < 1e-14) {
      Vector zeta(x.size());
      do {
        for (auto& v : zeta) v = rng.uniform();
      } while (norm_inf(zeta) == 0.0);
      z = onto_boundary(b, std::move(zeta));
    } else {
      Vector c = symv(a, x);
      for (auto& v : c) v *= -2.0;
      z = solve_qpk(c, set, x, cfg.subsolver).x;
    }
    const Vector d = subtract(z, x);
    const double step = norm2(d) / (1.0 + norm2(z));
    double alpha = 0.0;

    if (step <= cfg.eps) {
      x = std::move(z);
      if (cfg.keep_trace) rep.trace.push_back({qp_objective(p, x), step, 0.0});
      rep.converged = true;
      ++k;
      break;
    }

    Vector next = z;
    if (algo == Algorithm::Bdca && cfg.line_search && active_set_included(z, x, cfg.active_tol) &&
        -2.0 * bilinear(a, z, d) < 0.0) {
      const double abar = alpha_bar_qp(p, z, d);
      if (abar > 0.0 && std::isfinite(abar)) {
        Vector trial(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) trial[i] = std::max(z[i] + abar * d[i], 0.0);
        if (qp_objective(p, trial) < qp_objective(p, z)) {
          next = std::move(trial);
          alpha = abar;
          ++rep.line_searches;
        }
      }
    }
    x = std::move(next);
    if (cfg.keep_trace) rep.trace.push_back({qp_objective(p, x), step, alpha});
  }
  rep.iterations = k;

  rep.lambda_shifted = rayleigh(p, x);
  rep.lambda = rep.lambda_shifted - p.shift();
  auto feas = feasibility_exponent(p, x, rep.lambda);
  rep.c = feas.c;
  rep.measure = feas.measure;
  rep.w = std::move(feas.w);
  rep.x = std::move(x);
  rep.cpu_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace seicp
