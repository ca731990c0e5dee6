#include "seicp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "seicp/error.hpp"
#include "seicp/kernels.hpp"

namespace seicp {

SpdCertificate::SpdCertificate(std::size_t n, std::vector<double> lower)
    : n_(n), l_(std::move(lower)), min_diag_(0.0) {
  double m = l_.empty() ? 0.0 : l_[0];
  for (std::size_t i = 0; i < n_; ++i) m = std::min(m, l_[i * n_ + i]);
  min_diag_ = m;
}

Vector SpdCertificate::solve_lower(std::span<const double> b) const {
  Vector y(b.begin(), b.end());
  for (std::size_t i = 0; i < n_; ++i) {
    double s = y[i];
    for (std::size_t k = 0; k < i; ++k) s -= l_[i * n_ + k] * y[k];
    y[i] = s / l_[i * n_ + i];
  }
  return y;
}

Vector SpdCertificate::solve_upper(std::span<const double> b) const {
  Vector y(b.begin(), b.end());
  for (std::size_t ii = n_; ii-- > 0;) {
    double s = y[ii];
    for (std::size_t k = ii + 1; k < n_; ++k) s -= l_[k * n_ + ii] * y[k];
    y[ii] = s / l_[ii * n_ + ii];
  }
  return y;
}

Vector SpdCertificate::solve(std::span<const double> b) const {
  return solve_upper(solve_lower(b));
}

CholeskyResult cholesky(const SymMatrix& m) {
  const std::size_t n = m.size();
  for (double v : m.data())
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidMatrix, "non-finite entry");
  std::vector<double> l(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j);
    const double* lj = l.data() + j * n;
    for (std::size_t k = 0; k < j; ++k) d -= lj[k] * lj[k];
    if (!(d > 0.0)) return NotSpd{j + 1};
    const double ljj = std::sqrt(d);
    l[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      const double* li = l.data() + i * n;
      for (std::size_t k = 0; k < j; ++k) s -= li[k] * lj[k];
      l[i * n + j] = s / ljj;
    }
  }
  return SpdCertificate(n, std::move(l));
}

bool is_spd(const SymMatrix& m) { return std::holds_alternative<SpdCertificate>(cholesky(m)); }

SpdCertificate require_spd(const SymMatrix& m, const char* what) {
  auto r = cholesky(m);
  if (auto* bad = std::get_if<NotSpd>(&r))
    throw Error(ErrorKind::InvalidProblem, std::string(what) + " is not SPD (pivot " +
                                               std::to_string(bad->pivot) + ")");
  return std::get<SpdCertificate>(std::move(r));
}

Vector SymEigen::column(std::size_t j) const {
  const std::size_t n = values.size();
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = vectors[i * n + j];
  return v;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

}  // namespace

SymEigen sym_eigen(const SymMatrix& m, bool want_vectors) {
  const std::size_t n = m.size();
  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> v;
  if (want_vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }
  const double fro = m.frobenius_norm();
  const double tol = 1e-12 * fro;

  int sweep = 0;
  while (off_diagonal_norm(a, n) > tol) {
    if (sweep >= kJacobiMaxSweeps)
      throw Error(ErrorKind::EigenFailure,
                  "Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          const double nrp = arp - s * (arq + tau * arp);
          const double nrq = arq + s * (arp - tau * arq);
          a[r * n + p] = a[p * n + r] = nrp;
          a[r * n + q] = a[q * n + r] = nrq;
        }
        if (want_vectors) {
          for (std::size_t r = 0; r < n; ++r) {
            const double vrp = v[r * n + p];
            const double vrq = v[r * n + q];
            v[r * n + p] = vrp - s * (vrq + tau * vrp);
            v[r * n + q] = vrq + s * (vrp - tau * vrq);
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });

  SymEigen out;
  out.sweeps = sweep;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a[order[k] * n + order[k]];
  if (want_vectors) {
    out.vectors.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) out.vectors[i * n + k] = v[i * n + order[k]];
  }
  return out;
}

double gen_eigen_min(const SymMatrix& g, const SpdCertificate& d) {
  const std::size_t n = g.size();
  if (d.size() != n) throw Error(ErrorKind::InvalidMatrix, "dimension mismatch");
  // W = L^-1 G L^-T, via X = L^-1 G, then W = L^-1 X^T.
  std::vector<double> x(g.data().begin(), g.data().end());
  kernels::lower_solve_columns(n, d.factor(), x);
  std::vector<double> xt(n * n);
  kernels::transpose(n, x, xt);
  kernels::lower_solve_columns(n, d.factor(), xt);
  const auto w = SymMatrix::from_dense(n, xt, /*symmetrize=*/true);
  return sym_eigen(w, /*want_vectors=*/false).values.front();
}

double condition_number(const SymEigen& eig) {
  const double lo = eig.values.front();
  const double hi = eig.values.back();
  if (!(lo > 0.0)) throw Error(ErrorKind::InvalidProblem, "matrix is not positive definite");
  return hi / lo;
}

}  // namespace seicp
