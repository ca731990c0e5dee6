#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "seicp/ellcone.hpp"

using namespace seicp;

TEST_CASE("project_ellipsoid examples") {
  const auto id = SymMatrix::identity(2);
  const EllConeSet ball(id);
  const double out[] = {2, 0};
  auto p = project_ellipsoid(out, ball);
  CHECK(p.x[0] == doctest::Approx(1.0));
  CHECK(p.x[1] == doctest::Approx(0.0));

  const double in[] = {0.3, 0.1};
  p = project_ellipsoid(in, ball);
  CHECK(p.x[0] == 0.3);
  CHECK(p.x[1] == 0.1);
  CHECK(p.multiplier == 0.0);

  const double d41[] = {4, 1};
  const EllConeSet ell(SymMatrix::diagonal(d41));
  const double y[] = {1, 0};
  p = project_ellipsoid(y, ell);
  CHECK(p.x[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(std::abs(p.x[1]) <= 1e-14);
  CHECK(p.multiplier == doctest::Approx(0.25).epsilon(1e-9));

  // Bisection on the 1D secular equation 4 / (1 + 4 mu)^2 = 1.
  double lo = 0, hi = 10;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double den = 1 + 4 * mid;
    (4.0 / (den * den) > 1.0 ? lo : hi) = mid;
  }
  CHECK(p.multiplier == doctest::Approx(lo).epsilon(1e-9));
}

TEST_CASE("project_ellipsoid is the nearest boundary point") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const EllConeSet set(oracle::random_spd(n, rng));
    Vector y(n);
    for (auto& v : y) v = rng.uniform(-3, 3);
    const auto p = project_ellipsoid(y, set);
    const double q = quad_form(set.matrix(), p.x);
    CHECK(q <= 1.0 + 1e-9);
    // KKT: y - x = mu B x.
    const Vector bx = symv(set.matrix(), p.x);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(y[i] - p.x[i] - p.multiplier * bx[i]) <= 1e-8 * (1 + norm2(y)));
  }
}

TEST_CASE("solve_qpk examples") {
  const EllConeSet ball(SymMatrix::identity(2));
  const double start[] = {0.5, 0.5};
  QpkOptions opts;
  opts.certify = true;

  const double c1[] = {-1, 0};
  auto r = solve_qpk(c1, ball, start, opts);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(r.x[1]) <= 1e-6);
  CHECK(r.certificate <= 1e-6);

  const double c2[] = {1, 1};
  r = solve_qpk(c2, ball, start, opts);
  CHECK(norm2(r.x) <= 1e-9);

  const double c3[] = {-1, -1};
  r = solve_qpk(c3, ball, start, opts);
  CHECK(r.x[0] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-6));
  CHECK(r.x[1] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-6));
  CHECK(r.certificate <= 1e-6);

  const double zero[] = {0, 0};
  r = solve_qpk(zero, ball, start);
  CHECK(r.x[0] == 0.5);
  CHECK(r.x[1] == 0.5);
}

TEST_CASE("solve_qpk matches support enumeration") {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const EllConeSet set(oracle::random_spd(n, rng));
    Vector c(n), start(n);
    for (auto& v : c) v = rng.uniform(-1, 1);
    for (auto& v : start) v = rng.uniform();
    const auto r = solve_qpk(c, set, start);
    const auto ref = oracle::ellcone_linear_min(c, set.matrix());
    CHECK(r.objective <= ref.value + 1e-6);
    const double q = quad_form(set.matrix(), r.x);
    CHECK(q <= 1.0 + 1e-9);
    for (double v : r.x) CHECK(v >= -1e-12);
    if (r.objective < 0.0) CHECK(q >= 1.0 - 1e-6);
  }
}

TEST_CASE("qpk certificate is small at the solution") {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const EllConeSet set(oracle::random_spd(n, rng));
    Vector c(n), start(n, 0.1);
    for (auto& v : c) v = rng.uniform(-1, 0.2);
    QpkOptions opts;
    opts.certify = true;
    const auto r = solve_qpk(c, set, start, opts);
    CHECK(r.converged);
    CHECK(r.certificate <= 1e-6);
  }
}

TEST_CASE("Dykstra projection onto the intersection") {
  const EllConeSet ball(SymMatrix::identity(2));
  const double v[] = {2, -1};
  const auto r = project_ellcone(v, ball, 1e-12);
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(1.0));
  CHECK(std::abs(r.x[1]) <= 1e-10);
}
