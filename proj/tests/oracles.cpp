#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace oracle {

Vector simplex_projection(std::span<const double> v) {
  const std::size_t n = v.size();
  Vector best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    double sum = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        sum += v[i];
        ++count;
      }
    const double theta = (sum - 1.0) / count;
    Vector x(n, 0.0);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (mask & (1u << i)) {
        x[i] = v[i] - theta;
        ok = x[i] >= 0.0;
      } else {
        ok = v[i] - theta <= 1e-15;
      }
    }
    if (!ok) continue;
    double dist = 0.0;
    for (std::size_t i = 0; i < n; ++i) dist += (x[i] - v[i]) * (x[i] - v[i]);
    if (dist < best_dist) {
      best_dist = dist;
      best = x;
    }
  }
  if (best.empty()) throw std::logic_error("no valid support");
  return best;
}

Vector gauss_solve(std::vector<double> m, Vector r) {
  const std::size_t n = r.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(m[i * n + col]) > std::abs(m[piv * n + col])) piv = i;
    if (m[piv * n + col] == 0.0) throw std::logic_error("singular");
    for (std::size_t k = 0; k < n; ++k) std::swap(m[col * n + k], m[piv * n + k]);
    std::swap(r[col], r[piv]);
    for (std::size_t i = col + 1; i < n; ++i) {
      const double f = m[i * n + col] / m[col * n + col];
      for (std::size_t k = col; k < n; ++k) m[i * n + k] -= f * m[col * n + k];
      r[i] -= f * r[col];
    }
  }
  Vector u(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = r[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= m[i * n + k] * u[k];
    u[i] = s / m[i * n + i];
  }
  return u;
}

LinearMin ellcone_linear_min(std::span<const double> c, const SymMatrix& b) {
  const std::size_t n = c.size();
  LinearMin best{Vector(n, 0.0), 0.0};
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    const std::size_t m = s.size();
    std::vector<double> bss(m * m);
    Vector rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
      rhs[i] = -c[s[i]];
      for (std::size_t j = 0; j < m; ++j) bss[i * m + j] = b(s[i], s[j]);
    }
    const Vector u = gauss_solve(bss, rhs);
    double q = 0.0;
    for (std::size_t i = 0; i < m; ++i) q -= c[s[i]] * u[i];
    if (!(q > 0.0)) continue;
    bool nonneg = true;
    for (double v : u) nonneg = nonneg && v >= 0.0;
    if (!nonneg) continue;
    Vector x(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) x[s[i]] = u[i] / std::sqrt(q);
    const double value = -std::sqrt(q);
    if (value < best.value) best = {x, value};
  }
  return best;
}

double eig2_min(double a, double b, double d) {
  return 0.5 * (a + d) - std::sqrt(0.25 * (a - d) * (a - d) + b * b);
}

double bisect_feasible_step(const SymMatrix& b, std::span<const double> z,
                            std::span<const double> d, double hi) {
  auto feasible = [&](double t) {
    Vector x(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      x[i] = z[i] + t * d[i];
      if (x[i] < -1e-15) return false;
    }
    return seicp::quad_form(b, x) <= 1.0 + 1e-15;
  };
  double lo = 0.0;
  if (feasible(hi)) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

SymMatrix random_spd(std::size_t n, seicp::Rng& rng, double lo, double spread) {
  // G G^T / n scaled, plus lo I.
  std::vector<double> g(n * n);
  for (auto& v : g) v = rng.uniform(-1.0, 1.0);
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += g[i * n + k] * g[j * n + k];
      m.set(i, j, spread * s / n + (i == j ? lo : 0.0));
    }
  return m;
}

SymMatrix random_sym(std::size_t n, seicp::Rng& rng, double lo, double hi) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m.set(i, j, rng.uniform(lo, hi));
  return m;
}

}  // namespace oracle
