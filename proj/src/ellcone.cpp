#include "seicp/ellcone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "seicp/error.hpp"

namespace seicp {

EllConeSet::EllConeSet(const SymMatrix& b)
    : EllConeSet(b, require_spd(b, "ellipsoid matrix B")) {}

EllConeSet::EllConeSet(const SymMatrix& b, SpdCertificate cert)
    : b_(b), cert_(std::move(cert)), eig_(sym_eigen(b, /*want_vectors=*/true)) {}

EllipsoidProjection project_ellipsoid(std::span<const double> y, const SymMatrix& b,
                                      const SymEigen& eig) {
  const std::size_t n = y.size();
  for (double v : y)
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "non-finite point");
  EllipsoidProjection out;
  if (quad_form(b, y) <= 1.0) {
    out.x.assign(y.begin(), y.end());
    return out;
  }

  // Coordinates in the eigenbasis: yt = V^T y.
  Vector yt(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) yt[k] += eig.vec(i, k) * y[i];

  const auto& lam = eig.values;
  auto secular = [&](double mu, double& deriv) {
    double f = -1.0;
    deriv = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double den = 1.0 + mu * lam[k];
      const double a = lam[k] * yt[k] * yt[k];
      f += a / (den * den);
      deriv -= 2.0 * a * lam[k] / (den * den * den);
    }
    return f;
  };

  // Secular function is convex and decreasing on mu >= 0, positive at 0.
  double lo = 0.0;
  double hi = norm2(y) / std::sqrt(lam.front());
  double mu = 0.0;
  int it = 0;
  for (; it < 200; ++it) {
    double deriv = 0.0;
    const double f = secular(mu, deriv);
    if (std::abs(f) <= 1e-12) break;
    if (f > 0.0)
      lo = mu;
    else
      hi = mu;
    double next = (deriv < 0.0) ? mu - f / deriv : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= 1e-16 * std::max(1.0, hi)) break;
    mu = next;
  }

  Vector xt(n);
  for (std::size_t k = 0; k < n; ++k) xt[k] = yt[k] / (1.0 + mu * lam[k]);
  out.x.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += eig.vec(i, k) * xt[k];
    out.x[i] = s;
  }
  const double q = quad_form(b, out.x);
  if (q > 1.0) {
    const double scale = 1.0 / std::sqrt(q);
    for (auto& v : out.x) v *= scale;
  }
  out.multiplier = mu;
  out.iterations = it;
  return out;
}

EllipsoidProjection project_ellipsoid(std::span<const double> y, const EllConeSet& set) {
  return project_ellipsoid(y, set.matrix(), set.eigen());
}

DykstraResult project_ellcone(std::span<const double> v, const EllConeSet& set, double tol,
                              int max_alternations) {
  const std::size_t n = v.size();
  Vector x(v.begin(), v.end());
  Vector p(n, 0.0), q(n, 0.0), y(n), tmp(n);
  DykstraResult out;
  for (int k = 1; k <= max_alternations; ++k) {
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + p[i];
    y = project_ellipsoid(tmp, set).x;
    for (std::size_t i = 0; i < n; ++i) p[i] = tmp[i] - y[i];

    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = y[i] + q[i];
      const double nx = std::max(t, 0.0);
      q[i] = t - nx;
      change += (nx - x[i]) * (nx - x[i]);
      x[i] = nx;
    }
    double gap = 0.0;
    for (std::size_t i = 0; i < n; ++i) gap += (x[i] - y[i]) * (x[i] - y[i]);
    out.alternations = k;
    out.residual = std::sqrt(gap);
    if (out.residual <= tol && std::sqrt(change) <= tol) {
      out.converged = true;
      break;
    }
  }
  out.x = std::move(x);
  return out;
}

double qpk_certificate(std::span<const double> c, const EllConeSet& set,
                       std::span<const double> x, double dykstra_tol, int dykstra_cap) {
  const double step = 1.0 / set.rho();
  Vector v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i] - step * c[i];
  const auto proj = project_ellcone(v, set, dykstra_tol, dykstra_cap);
  return norm2(subtract(x, proj.x));
}

namespace {

double conic_value(std::span<const double> c, std::span<const double> u,
                   std::span<const double> bu) {
  return 0.5 * dot(u, bu) + dot(c, u);
}

// Feasible point from a cone direction: clamp, then scale onto the ellipsoid.
Vector normalize_direction(const SymMatrix& b, std::span<const double> u) {
  Vector x(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) x[i] = std::max(u[i], 0.0);
  const double q = quad_form(b, x);
  if (!(q > 0.0)) return Vector(u.size(), 0.0);
  const double s = 1.0 / std::sqrt(q);
  for (auto& v : x) v *= s;
  return x;
}

}  // namespace

QpkResult solve_qpk(std::span<const double> c, const EllConeSet& set,
                    std::span<const double> start, const QpkOptions& opts) {
  const std::size_t n = set.size();
  const SymMatrix& b = set.matrix();
  if (c.size() != n || start.size() != n)
    throw Error(ErrorKind::InvalidInput, "dimension mismatch in QP subproblem");
  for (double v : c)
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "non-finite objective");

  QpkResult out;
  if (norm_inf(c) == 0.0) {
    // Every feasible point is optimal; keep the (feasible) start.
    out.x.assign(start.begin(), start.end());
    for (auto& v : out.x) v = std::max(v, 0.0);
    if (quad_form(b, out.x) > 1.0) out.x = normalize_direction(b, out.x);
    out.converged = true;
    if (opts.certify) out.certificate = 0.0;
    return out;
  }

  const double step = 1.0 / set.rho();

  // Warm start: best nonnegative multiple of the clamped start.
  Vector u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = std::max(start[i], 0.0);
  {
    const double q = quad_form(b, u);
    const double lin = dot(c, u);
    if (q > 0.0 && lin < 0.0) {
      const double t = -lin / q;
      for (auto& v : u) v *= t;
    } else {
      for (std::size_t i = 0; i < n; ++i) u[i] = std::max(-c[i], 0.0) * step;
    }
  }

  Vector bu = symv(b, u);
  double fu = conic_value(c, u, bu);
  Vector y = u, by = bu;
  Vector un(n), bun(n);
  double t = 1.0;
  double residual = std::numeric_limits<double>::infinity();
  int it = 0;
  for (; it < opts.maxit; ++it) {
    for (std::size_t i = 0; i < n; ++i) un[i] = std::max(y[i] - step * (by[i] + c[i]), 0.0);
    bun = symv(b, un);
    const double fun = conic_value(c, un, bun);
    if (fun > fu && t > 1.0) {
      // Momentum overshoot: restart from the last accepted point.
      t = 1.0;
      y = u;
      by = bu;
      continue;
    }

    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double pg = un[i] - std::max(un[i] - step * (bun[i] + c[i]), 0.0);
      r2 += pg * pg;
    }
    const double scale = norm2(un);
    residual = scale > 0.0 ? std::sqrt(r2) / scale : std::sqrt(r2);

    const double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    const double beta = (t - 1.0) / tn;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = un[i] + beta * (un[i] - u[i]);
      by[i] = bun[i] + beta * (bun[i] - bu[i]);
    }
    u.swap(un);
    bu.swap(bun);
    fu = fun;
    t = tn;
    if (residual <= opts.tol || scale == 0.0) {
      ++it;
      out.converged = true;
      break;
    }
  }

  out.iterations = it;
  out.residual = residual;
  out.x = normalize_direction(b, u);
  out.objective = dot(c, out.x);
  if (opts.certify)
    out.certificate = qpk_certificate(c, set, out.x, opts.tol / 10.0, opts.dykstra_cap);
  return out;
}

}  // namespace seicp
