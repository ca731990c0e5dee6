#include "seicp/fista.hpp"

#include <algorithm>
#include <cmath>

#include "seicp/error.hpp"
#include "seicp/simplex.hpp"

namespace seicp {

LnpkObjective::LnpkObjective(const SymMatrix& a, const SymMatrix& b, double eta,
                             std::span<const double> xk)
    : a_(a), eta_(eta), xk_(xk.begin(), xk.end()) {
  if (!(eta > 0.0)) throw Error(ErrorKind::InvalidConfig, "eta must be positive");
  if (norm_inf(xk) == 0.0) throw Error(ErrorKind::DegenerateIterate, "linearization point is 0");
  const Vector bx = symv(b, xk);
  const double xbx = dot(xk, bx);
  grad_h_.resize(xk.size());
  for (std::size_t i = 0; i < xk.size(); ++i) grad_h_[i] = eta * xk[i] - 2.0 * bx[i] / xbx;
}

double LnpkObjective::value(std::span<const double> y) const {
  const double yay = quad_form(a_, y);
  if (!(yay > 0.0)) throw Error(ErrorKind::DegenerateIterate, "y^T A y is not positive");
  return 0.5 * eta_ * dot(y, y) - std::log(yay) - dot(y, grad_h_);
}

Vector LnpkObjective::gradient(std::span<const double> y) const {
  if (norm_inf(y) == 0.0) throw Error(ErrorKind::DegenerateIterate, "gradient at y = 0");
  const Vector ay = symv(a_, y);
  const double yay = dot(y, ay);
  if (!(yay > 0.0)) throw Error(ErrorKind::DegenerateIterate, "y^T A y is not positive");
  Vector g(y.size());
  // eta y - grad_h = eta (y - x^k) + 2 B x^k / <x^k, B x^k>
  for (std::size_t i = 0; i < y.size(); ++i) g[i] = eta_ * y[i] - 2.0 * ay[i] / yay - grad_h_[i];
  return g;
}

Vector grad_phi(const LnpkObjective& obj, std::span<const double> y) { return obj.gradient(y); }

double fista_momentum_next(double t) { return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t)); }

FistaResult fista_solve(const LnpkObjective& obj, const StepsizePolicy& policy,
                        const FistaOptions& opts) {
  if (!(opts.tol > 0.0)) throw Error(ErrorKind::InvalidConfig, "FISTA tolerance must be > 0");
  const bool backtrack = policy.kind == StepsizePolicy::Kind::Backtracking;
  if (backtrack && !(policy.factor > 1.0 && policy.initial > 0.0))
    throw Error(ErrorKind::InvalidConfig, "backtracking needs s > 0 and r > 1");
  if (!backtrack && !(policy.lipschitz > 0.0))
    throw Error(ErrorKind::InvalidConfig, "constant stepsize needs L > 0");

  const std::size_t n = obj.size();
  Vector u = opts.start ? *opts.start : Vector(obj.linearization_point().begin(),
                                               obj.linearization_point().end());
  const double start_value = obj.value(u);
  Vector y = u;
  Vector best = u;
  double best_value = start_value;
  double u_value = start_value;
  double t = 1.0;
  double lip = backtrack ? policy.initial : policy.lipschitz;

  FistaResult out;
  Vector v(n), diff(n);
  int i = 0;
  for (; i < opts.maxit; ++i) {
    if (norm2(y) < 1e-14) {
      t = 1.0;
      y = u;
      ++out.restarts;
    }
    const Vector g = obj.gradient(y);
    Vector next;
    if (backtrack) {
      const double fy = obj.value(y);
      int enlargements = 0;
      for (;;) {
        for (std::size_t k = 0; k < n; ++k) v[k] = y[k] - g[k] / lip;
        next = project_simplex(v);
        for (std::size_t k = 0; k < n; ++k) diff[k] = next[k] - y[k];
        const double model = fy + dot(g, diff) + 0.5 * lip * dot(diff, diff);
        if (obj.value(next) <= model) break;
        lip *= policy.factor;
        ++enlargements;
      }
      out.max_backtracks = std::max(out.max_backtracks, enlargements);
    } else {
      for (std::size_t k = 0; k < n; ++k) v[k] = y[k] - g[k] / lip;
      next = project_simplex(v);
    }

    const double tn = fista_momentum_next(t);
    const double beta = (t - 1.0) / tn;
    for (std::size_t k = 0; k < n; ++k) {
      diff[k] = next[k] - u[k];
      y[k] = next[k] + beta * diff[k];
    }
    const double step = norm2(diff) / (1.0 + norm2(next));
    u.swap(next);
    t = tn;
    u_value = obj.value(u);
    if (u_value < best_value) {
      best_value = u_value;
      best = u;
    }
    if (opts.on_iterate) opts.on_iterate(i + 1, u_value);
    if (step <= opts.tol) {
      ++i;
      out.converged = true;
      break;
    }
  }

  out.iterations = i;
  out.final_lipschitz = lip;
  if (u_value <= start_value) {
    out.u = std::move(u);
    out.value = u_value;
  } else {
    out.u = std::move(best);
    out.value = best_value;
  }
  return out;
}

}  // namespace seicp
