#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "seicp/datasets.hpp"
#include "seicp/error.hpp"
#include "seicp/lnp.hpp"
#include "seicp/simplex.hpp"

using namespace seicp;

namespace {

SeicpProblem unshifted(const SymMatrix& a, const SymMatrix& b) {
  return shift_to_spd(a, b, {ShiftMode::Bound, 1.0});
}

}  // namespace

TEST_CASE("eta_value examples") {
  const auto id100 = SymMatrix::identity(100);
  const auto p100 = unshifted(id100, id100);
  CHECK(eta_value(p100, EtaPolicy::practical()).eta == 100.0);

  const auto id2 = SymMatrix::identity(2);
  CHECK(eta_value(unshifted(id2, id2), EtaPolicy::convex_bound()).eta == doctest::Approx(8.0));

  Vector diag(10, 1.0);
  diag[9] = 3.0;
  const auto p10 = unshifted(SymMatrix::diagonal(diag), SymMatrix::identity(10));
  const auto info = eta_value(p10, EtaPolicy::explicit_value(10.0));
  CHECK(info.eta == 10.0);
  CHECK(info.lipschitz_g == doctest::Approx(70.0));
  CHECK(info.lipschitz_h == doctest::Approx(30.0));
  CHECK_THROWS_AS(eta_value(p10, EtaPolicy::explicit_value(0.0)), Error);
  CHECK_THROWS_AS(eta_value(p10, EtaPolicy::explicit_value(-1.0)), Error);
}

TEST_CASE("lnp_objective examples") {
  const auto id = SymMatrix::identity(2);
  const auto same = unshifted(id, id);
  const double x[] = {0.3, 0.7};
  CHECK(lnp_objective(same, x) == 0.0);

  const double de[] = {std::exp(2.0), 1.0};
  const auto p = unshifted(SymMatrix::diagonal(de), id);
  const double e1[] = {1, 0};
  CHECK(lnp_objective(p, e1) == doctest::Approx(-2.0));

  Rng rng(71);
  const auto q = shift_to_spd(oracle::random_sym(5, rng, -1, 1), oracle::random_spd(5, rng));
  const auto y = project_simplex(random_start(5, rng));
  CHECK(lnp_objective(q, y) == doctest::Approx(-std::log(rayleigh(q, y))).epsilon(1e-12));
}

TEST_CASE("DC gradients") {
  Rng rng(72);
  const auto p = shift_to_spd(oracle::random_sym(4, rng, -1, 1), oracle::random_spd(4, rng));
  const auto x = project_simplex(random_start(4, rng));
  const double eta = 3.0;
  const auto gg = lnp_grad_g(p, eta, x);
  const auto gh = lnp_grad_h(p, eta, x);
  const double h = 1e-6;
  for (std::size_t i = 0; i < 4; ++i) {
    Vector xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    auto g = [&](std::span<const double> v, const SymMatrix& m) {
      return 0.5 * eta * dot(v, v) - std::log(quad_form(m, v));
    };
    CHECK(std::abs((g(xp, p.shifted_a()) - g(xm, p.shifted_a())) / (2 * h) - gg[i]) <= 1e-5);
    CHECK(std::abs((g(xp, p.b()) - g(xm, p.b())) / (2 * h) - gh[i]) <= 1e-5);
  }
}

TEST_CASE("exact line search examples") {
  const auto id = SymMatrix::identity(2);
  const double d21[] = {2, 1};
  const auto p = unshifted(SymMatrix::diagonal(d21), id);
  const double z[] = {1, 0}, d[] = {-1, 1};
  const auto ls = exact_line_search_lnp(p, z, d);
  CHECK(ls.alpha_bar == 1.0);
  REQUIRE(ls.roots.size() == 2);
  CHECK(ls.roots[0] == doctest::Approx(0.0));
  CHECK(ls.roots[1] == doctest::Approx(1.0));
  CHECK(ls.alpha == 0.0);
  CHECK(ls.q(0) == doctest::Approx(0.5));
  CHECK(ls.q(1) == doctest::Approx(1.0));
  const auto grid = oracle::grid_minimum([&](double t) { return ls.q(t); }, 1.0, 10001);
  CHECK(ls.q_alpha <= grid.value + 1e-12);

  // a1 b2 - a2 b1 = 0 exactly: the numerator of q' is linear with root 1/8.
  const double d3[] = {1, 2, 1};
  const auto p3 = unshifted(SymMatrix::diagonal(d3), SymMatrix::identity(3));
  const double z3[] = {0.5, 0.25, 0.25}, dir3[] = {-1, 0, 1};
  const auto lin = exact_line_search_lnp(p3, z3, dir3);
  CHECK(lin.a1 * lin.b2 - lin.a2 * lin.b1 == 0.0);
  CHECK(lin.alpha_bar == 0.5);
  REQUIRE(lin.roots.size() == 1);
  CHECK(lin.roots[0] == doctest::Approx(0.125));

  const auto same = unshifted(id, id);
  const double zz[] = {0.4, 0.6}, dd[] = {0.3, -0.3};
  CHECK(exact_line_search_lnp(same, zz, dd).alpha == 0.0);

  const double zero[] = {0, 0};
  CHECK_THROWS_AS(exact_line_search_lnp(p, z, zero), Error);
}

TEST_CASE("exact line search beats a dense grid") {
  Rng rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const auto p = shift_to_spd(oracle::random_sym(n, rng, -1, 1), oracle::random_spd(n, rng));
    const auto z = project_simplex(random_start(n, rng));
    const auto x = project_simplex(random_start(n, rng));
    const auto d = subtract(z, x);
    const auto ls = exact_line_search_lnp(p, z, d);
    const auto grid = oracle::grid_minimum(
        [&](double t) { return lnp_objective(p, axpy(t, d, z)); }, ls.alpha_bar, 20001);
    CHECK(lnp_objective(p, axpy(ls.alpha, d, z)) <= grid.value + 1e-8);
    CHECK(lnp_objective(p, axpy(ls.alpha, d, z)) <= lnp_objective(p, z) + 1e-12);
  }
}

TEST_CASE("active set inclusion") {
  const double z[] = {0, 0.5, 0.5}, x[] = {0, 0.2, 0.8}, x2[] = {0.1, 0.1, 0.8};
  CHECK(active_set_included(z, x, 1e-10));
  CHECK_FALSE(active_set_included(z, x2, 1e-10));
}

TEST_CASE("solve_lnp examples") {
  const auto id = SymMatrix::identity(2);
  const double x0[] = {0.2, 0.9};
  for (auto algo : {Algorithm::Dca, Algorithm::Bdca}) {
    const auto r = solve_lnp(unshifted(id, id), x0, {}, algo);
    CHECK(r.converged);
    CHECK(r.iterations <= 2);
    CHECK(r.lambda == doctest::Approx(1.0));
  }

  const double d31[] = {3, 1};
  const auto p = shift_to_spd(SymMatrix::diagonal(d31), id);
  const double half[] = {0.5, 0.5};
  for (auto algo : {Algorithm::Dca, Algorithm::Bdca}) {
    const auto r = solve_lnp(p, half, {}, algo);
    CHECK(r.converged);
    CHECK(r.lambda == doctest::Approx(3.0).epsilon(1e-7));
    CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(r.c >= 3.0);
  }
  // Grid over the simplex confirms the vertex is the maximizer of the Rayleigh quotient.
  const auto grid = oracle::grid_minimum(
      [&](double t) {
        const double v[] = {t, 1 - t};
        return -rayleigh(p, v);
      },
      1.0, 1001);
  CHECK(grid.alpha == 1.0);

  const double zero[] = {0, 0};
  CHECK_THROWS_AS(solve_lnp(p, zero, {}, Algorithm::Dca), Error);
  LnpConfig bad;
  bad.eps = 0.0;
  CHECK_THROWS_AS(solve_lnp(p, half, bad, Algorithm::Dca), Error);
}

TEST_CASE("solve_lnp trajectories descend and stay in the simplex") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Rng rng(seed);
    const auto pair = gen_randeicp(-1, 1, 30, rng);
    const auto p = shift_to_spd(pair.a, pair.b);
    Rng starts(seed, 1);
    const auto x0 = random_start(30, starts);
    for (auto algo : {Algorithm::Dca, Algorithm::Bdca}) {
      const auto r = solve_lnp(p, x0, {}, algo);
      CHECK(r.converged);
      CHECK(r.c >= 3.0);
      CHECK(on_simplex(r.x));
      for (std::size_t k = 1; k < r.trace.size(); ++k)
        CHECK(r.trace[k].objective <= r.trace[k - 1].objective + 1e-12);
      CHECK(r.trace.size() == static_cast<std::size_t>(r.iterations) + 1);
      if (algo == Algorithm::Dca) CHECK(r.line_searches == 0);
    }
  }
}

TEST_CASE("solve_lnp with backtracking FISTA") {
  Rng rng(74);
  const auto pair = gen_randeicp(-1, 1, 20, rng);
  const auto p = shift_to_spd(pair.a, pair.b);
  const auto x0 = random_start(20, rng);
  LnpConfig cfg;
  cfg.fista_backtracking = true;
  const auto r = solve_lnp(p, x0, cfg, Algorithm::Bdca);
  CHECK(r.converged);
  CHECK(r.c >= 3.0);
}

TEST_CASE("solve_lnp reports maxit") {
  Rng rng(75);
  const auto pair = gen_randeicp(-1, 1, 30, rng);
  const auto p = shift_to_spd(pair.a, pair.b);
  LnpConfig cfg;
  cfg.maxit = 2;
  const auto r = solve_lnp(p, random_start(30, rng), cfg, Algorithm::Dca);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 2);
}
