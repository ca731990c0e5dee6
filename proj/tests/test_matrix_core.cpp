#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "seicp/error.hpp"
#include "seicp/linalg.hpp"
#include "seicp/matrix_market.hpp"

using namespace seicp;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::Io;
}

double max_residual(const SymMatrix& m, const SymEigen& e) {
  double worst = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    const Vector v = e.column(j);
    const Vector mv = symv(m, v);
    worst = std::max(worst, norm2(axpy(-e.values[j], v, mv)));
  }
  return worst;
}

}  // namespace

TEST_CASE("SymMatrix construction") {
  CHECK(kind_of([] { SymMatrix m(0); }) == ErrorKind::InvalidMatrix);
  const double asym[] = {1, 2, 0, 1};
  CHECK(kind_of([&] { SymMatrix::from_dense(2, asym); }) == ErrorKind::InvalidMatrix);
  const auto s = SymMatrix::from_dense(2, asym, true);
  CHECK(s(0, 1) == 1.0);
  CHECK(s(1, 0) == 1.0);
  const double bad[] = {1, NAN, NAN, 1};
  CHECK(kind_of([&] { SymMatrix::from_dense(2, bad, true); }) == ErrorKind::InvalidMatrix);
  SymMatrix m(3);
  m.set(2, 0, 5.0);
  CHECK(m(0, 2) == 5.0);
}

TEST_CASE("cholesky examples") {
  auto r = cholesky(SymMatrix::identity(3));
  REQUIRE(std::holds_alternative<SpdCertificate>(r));
  const auto& c = std::get<SpdCertificate>(r);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(c.l(i, j) == (i == j ? 1.0 : 0.0));

  const double d49[] = {4, 9};
  const auto c2 = std::get<SpdCertificate>(cholesky(SymMatrix::diagonal(d49)));
  CHECK(c2.l(0, 0) == 2.0);
  CHECK(c2.l(1, 1) == 3.0);
  CHECK(c2.min_diagonal() == 2.0);

  const double dneg[] = {1, -1};
  auto bad = cholesky(SymMatrix::diagonal(dneg));
  REQUIRE(std::holds_alternative<NotSpd>(bad));
  CHECK(std::get<NotSpd>(bad).pivot == 2);
  CHECK(kind_of([&] { require_spd(SymMatrix::diagonal(dneg), "M"); }) ==
        ErrorKind::InvalidProblem);
}

TEST_CASE("cholesky reconstructs and solves") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto m = oracle::random_spd(n, rng);
    const auto c = require_spd(m, "M");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += c.l(i, k) * c.l(j, k);
        CHECK(std::abs(s - m(i, j)) <= 1e-10 * m.frobenius_norm());
      }
    Vector rhs(n);
    for (auto& v : rhs) v = rng.uniform(-1, 1);
    const Vector x = c.solve(rhs);
    const Vector ref = oracle::gauss_solve({m.data().begin(), m.data().end()}, rhs);
    for (std::size_t i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(ref[i]).epsilon(1e-9));
  }
}

TEST_CASE("cholesky agrees with the spectrum") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto m = oracle::random_sym(n, rng);
    const auto e = sym_eigen(m, false);
    if (std::abs(e.values.front()) < 1e-6) continue;
    CHECK(is_spd(m) == (e.values.front() > -1e-10 * m.frobenius_norm()));
  }
}

TEST_CASE("sym_eigen examples") {
  const double d31[] = {3, 1};
  auto e = sym_eigen(SymMatrix::diagonal(d31));
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(3.0));
  e = sym_eigen(SymMatrix::from_rows({{2, 1}, {1, 2}}));
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(3.0));
}

TEST_CASE("sym_eigen residual, orthogonality and reconstruction") {
  Rng rng(13);
  for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
    const auto m = oracle::random_sym(n, rng, -3, 3);
    const auto e = sym_eigen(m);
    CHECK(max_residual(m, e) <= 1e-9 * m.frobenius_norm());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double vv = dot(e.column(i), e.column(j));
        CHECK(std::abs(vv - (i == j ? 1.0 : 0.0)) <= 1e-9);
        double rec = 0.0;
        for (std::size_t k = 0; k < n; ++k) rec += e.vec(i, k) * e.values[k] * e.vec(j, k);
        CHECK(std::abs(rec - m(i, j)) <= 1e-9 * m.frobenius_norm());
      }
    for (std::size_t k = 1; k < n; ++k) CHECK(e.values[k - 1] <= e.values[k]);
  }
}

TEST_CASE("gen_eigen_min examples and bisection oracle") {
  const double g[] = {-2, 5}, d[] = {2, 1};
  CHECK(gen_eigen_min(SymMatrix::diagonal(g), require_spd(SymMatrix::diagonal(d), "D")) ==
        doctest::Approx(-1.0));
  CHECK(gen_eigen_min(SymMatrix::identity(3), require_spd(SymMatrix::identity(3), "D")) ==
        doctest::Approx(1.0));

  Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const auto gm = oracle::random_sym(4, rng, -2, 2);
    const auto dm = oracle::random_spd(4, rng);
    const double mu = gen_eigen_min(gm, require_spd(dm, "D"));
    // Bisection on t -> lambda_min(G - t D) sign change.
    double lo = -50, hi = 50;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (sym_eigen(gm.plus_scaled(-mid, dm), false).values.front() > 0 ? lo : hi) = mid;
    }
    CHECK(mu == doctest::Approx(lo).epsilon(1e-8));
    CHECK(is_spd(gm.plus_scaled(-mu + 1e-6, dm)));
    CHECK_FALSE(is_spd(gm.plus_scaled(-mu - 1e-3, dm)));
  }
}

TEST_CASE("condition number") {
  const double d[] = {2, 8};
  CHECK(condition_number(sym_eigen(SymMatrix::diagonal(d), false)) == doctest::Approx(4.0));
}

TEST_CASE("Matrix Market reader examples") {
  std::istringstream general(
      "%%MatrixMarket matrix coordinate real general\n% comment\n2 2 2\n1 1 1.0\n2 2 1.0\n");
  const auto id = read_matrix_market(general);
  CHECK(id(0, 0) == 1.0);
  CHECK(id(1, 1) == 1.0);
  CHECK(id(0, 1) == 0.0);

  std::istringstream sym("%%MatrixMarket matrix coordinate real symmetric\n2 2 1\n2 1 3\n");
  const auto s = read_matrix_market(sym);
  CHECK(s(0, 1) == 3.0);
  CHECK(s(1, 0) == 3.0);

  std::istringstream gen("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 2 2\n2 1 0\n");
  const auto g = read_matrix_market(gen);
  CHECK(g(0, 1) == 1.0);
  CHECK(g(1, 0) == 1.0);

  std::istringstream arr("%%MatrixMarket matrix array real general\n2 2\n1\n2\n4\n3\n");
  const auto a = read_matrix_market(arr);
  CHECK(a(0, 0) == 1.0);
  CHECK(a(0, 1) == 3.0);
  CHECK(a(1, 1) == 3.0);

  std::istringstream ints("%%MatrixMarket matrix coordinate integer symmetric\n1 1 1\n1 1 7\n");
  CHECK(read_matrix_market(ints)(0, 0) == 7.0);
}

TEST_CASE("Matrix Market reader errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_matrix_market(in, "t.mtx");
  };
  CHECK(kind_of([&] { parse("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1 0\n"); }) ==
        ErrorKind::UnsupportedFormat);
  CHECK(kind_of([&] { parse("%%MatrixMarket matrix coordinate pattern general\n1 1 1\n1 1\n"); }) ==
        ErrorKind::UnsupportedFormat);
  CHECK(kind_of([&] { parse("%%MatrixMarket matrix coordinate real skew-symmetric\n1 1 0\n"); }) ==
        ErrorKind::UnsupportedFormat);
  CHECK(kind_of([&] { parse("%%MatrixMarket matrix coordinate real general\n2 3 0\n"); }) ==
        ErrorKind::InvalidMatrix);
  CHECK(kind_of([&] { parse("garbage\n"); }) == ErrorKind::ParseError);
  try {
    parse("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n3 1 x\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("t.mtx:4") != std::string::npos);
  }
  CHECK(kind_of([] { read_matrix_market("/nonexistent/file.mtx"); }) == ErrorKind::Io);
}

TEST_CASE("Matrix Market round trip") {
  Rng rng(15);
  const auto m = oracle::random_sym(6, rng, -10, 10);
  std::stringstream io;
  write_matrix_market(io, m, "round trip");
  const auto back = read_matrix_market(io);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(back(i, j) == m(i, j));
}
