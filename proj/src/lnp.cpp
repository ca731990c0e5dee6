#include "seicp/lnp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "seicp/error.hpp"
#include "seicp/simplex.hpp"

namespace seicp {

EtaInfo eta_value(const SeicpProblem& p, const EtaPolicy& policy) {
  const double n = static_cast<double>(p.size());
  EtaInfo info;
  switch (policy.kind) {
    case EtaPolicy::Kind::Practical:
      info.eta = p.reduced_from_sqeicp() ? 2.0 * std::max(p.kappa_a(), p.kappa_b()) : n;
      break;
    case EtaPolicy::Kind::ConvexBound: {
      const double k = std::max(p.kappa_a(), p.kappa_b());
      info.eta = 4.0 * n * k * k;
      break;
    }
    case EtaPolicy::Kind::Explicit:
      if (!(policy.value > 0.0)) throw Error(ErrorKind::InvalidConfig, "eta must be positive");
      info.eta = policy.value;
      break;
  }
  info.lipschitz_g = info.eta + 2.0 * n * p.kappa_a();
  info.lipschitz_h = info.eta + 2.0 * n * p.kappa_b();
  return info;
}

double lnp_objective(const SeicpProblem& p, std::span<const double> x) {
  return std::log(quad_form(p.b(), x)) - std::log(quad_form(p.shifted_a(), x));
}

namespace {

Vector grad_dc_part(const SymMatrix& m, double eta, std::span<const double> x) {
  const Vector mx = symv(m, x);
  const double xmx = dot(x, mx);
  Vector g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = eta * x[i] - 2.0 * mx[i] / xmx;
  return g;
}

}  // namespace

Vector lnp_grad_g(const SeicpProblem& p, double eta, std::span<const double> x) {
  return grad_dc_part(p.shifted_a(), eta, x);
}

Vector lnp_grad_h(const SeicpProblem& p, double eta, std::span<const double> x) {
  return grad_dc_part(p.b(), eta, x);
}

double LineSearchCandidates::q(double t) const {
  return (a1 * t * t + b1 * t + c1) / (a2 * t * t + b2 * t + c2);
}

LineSearchCandidates exact_line_search_lnp(const SeicpProblem& p, std::span<const double> z,
                                           std::span<const double> d) {
  if (norm_inf(d) == 0.0) throw Error(ErrorKind::NoDirection, "line search along d = 0");
  LineSearchCandidates ls;
  const Vector bd = symv(p.b(), d);
  const Vector ad = symv(p.shifted_a(), d);
  ls.a1 = dot(d, bd);
  ls.b1 = 2.0 * dot(z, bd);
  ls.c1 = quad_form(p.b(), z);
  ls.a2 = dot(d, ad);
  ls.b2 = 2.0 * dot(z, ad);
  ls.c2 = quad_form(p.shifted_a(), z);

  double alpha_bar = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] < 0.0) alpha_bar = std::min(alpha_bar, -z[i] / d[i]);
  // A nonzero direction between two simplex points always has a negative entry.
  if (!std::isfinite(alpha_bar))
    throw Error(ErrorKind::NoDirection, "direction has no negative component");
  alpha_bar = std::max(alpha_bar, 0.0);
  ls.alpha_bar = alpha_bar;

  // q'(t) has the sign of P t^2 + 2 Q t + R.
  const double pc = ls.a1 * ls.b2 - ls.a2 * ls.b1;
  const double qc = ls.a1 * ls.c2 - ls.a2 * ls.c1;
  const double rc = ls.b1 * ls.c2 - ls.b2 * ls.c1;
  std::vector<double> roots;
  if (pc == 0.0) {
    if (qc != 0.0) roots.push_back(-rc / (2.0 * qc));
  } else {
    const double disc = qc * qc - pc * rc;
    if (disc >= 0.0) {
      const double w = -(qc + std::copysign(std::sqrt(disc), qc));
      roots.push_back(w / pc);
      if (w != 0.0) roots.push_back(rc / w);
    }
  }
  for (double r : roots)
    if (r >= 0.0 && r <= alpha_bar) ls.roots.push_back(r);
  std::sort(ls.roots.begin(), ls.roots.end());

  std::vector<double> candidates{0.0};
  for (double r : ls.roots) candidates.push_back(r);
  candidates.push_back(alpha_bar);
  std::sort(candidates.begin(), candidates.end());

  ls.alpha = 0.0;
  ls.q_alpha = ls.q(0.0);
  for (double t : candidates) {
    const double v = ls.q(t);
    if (v < ls.q_alpha) {
      ls.q_alpha = v;
      ls.alpha = t;
    }
  }
  return ls;
}

bool active_set_included(std::span<const double> z, std::span<const double> x, double tol) {
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] <= tol && x[i] > tol) return false;
  return true;
}

SolveReport solve_lnp(const SeicpProblem& p, std::span<const double> x0, const LnpConfig& cfg,
                      Algorithm algo) {
  if (!(cfg.eps > 0.0)) throw Error(ErrorKind::InvalidConfig, "eps must be positive");
  if (x0.size() != p.size()) throw Error(ErrorKind::InvalidInput, "x0 has the wrong size");
  if (norm_inf(x0) == 0.0) throw Error(ErrorKind::DegenerateIterate, "x0 must be nonzero");
  const auto t0 = std::chrono::steady_clock::now();

  const SymMatrix& a = p.shifted_a();
  const SymMatrix& b = p.b();
  const EtaInfo start_eta = eta_value(p, cfg.eta);
  const double eta_cap = std::max(start_eta.eta, eta_value(p, EtaPolicy::convex_bound()).eta);
  const double lg_offset = start_eta.lipschitz_g - start_eta.eta;
  double eta = start_eta.eta;
  auto policy_for = [&](double e) {
    return cfg.fista_backtracking ? StepsizePolicy::backtracking((e + lg_offset) / 100.0, 2.0)
                                  : StepsizePolicy::constant(e);
  };
  FistaOptions fopts;
  fopts.tol = cfg.fista_tol;
  fopts.maxit = cfg.fista_maxit;

  SolveReport rep;
  rep.model = Formulation::Lnp;
  rep.algo = algo;

  Vector x = project_simplex(x0);
  double fx = lnp_objective(p, x);
  if (cfg.keep_trace) rep.trace.push_back({fx, 0.0, 0.0});

  int k = 0;
  for (; k < cfg.maxit; ++k) {
    Vector z;
    for (;;) {
      const LnpkObjective sub(a, b, eta, x);
      auto sol = fista_solve(sub, policy_for(eta), fopts);
      z = std::move(sol.u);
      if (!cfg.adaptive_eta || eta >= eta_cap) break;
      if (sol.converged && lnp_objective(p, z) <= fx + cfg.descent_slack) break;
      eta = std::min(2.0 * eta, eta_cap);
      ++rep.eta_increases;
    }
    const Vector d = subtract(z, x);
    const double step = norm2(d) / (1.0 + norm2(z));
    double alpha = 0.0;

    if (step <= cfg.eps) {
      x = std::move(z);
      if (cfg.keep_trace) rep.trace.push_back({lnp_objective(p, x), step, 0.0});
      rep.converged = true;
      ++k;
      break;
    }

    Vector next = z;
    if (algo == Algorithm::Bdca && active_set_included(z, x, cfg.active_tol)) {
      const Vector bz = symv(b, z);
      const Vector az = symv(a, z);
      const double zbz = dot(z, bz);
      const double zaz = dot(z, az);
      double slope = 0.0;
      for (std::size_t i = 0; i < z.size(); ++i) slope += (bz[i] / zbz - az[i] / zaz) * d[i];
      if (slope < 0.0) {
        const auto ls = exact_line_search_lnp(p, z, d);
        if (ls.alpha > 0.0) {
          alpha = ls.alpha;
          double sum = 0.0;
          for (std::size_t i = 0; i < z.size(); ++i) {
            next[i] = std::max(z[i] + alpha * d[i], 0.0);
            sum += next[i];
          }
          // The objective is scale invariant; renormalizing stops the rounding
          // error in e^T x from being amplified by alpha at every step.
          for (auto& v : next) v /= sum;
          ++rep.line_searches;
        }
      }
    }
    x = std::move(next);
    fx = lnp_objective(p, x);
    if (cfg.keep_trace) rep.trace.push_back({fx, step, alpha});
  }
  rep.iterations = k;
  rep.eta = eta;

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
