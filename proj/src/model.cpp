#include "seicp/model.hpp"

#include <algorithm>
#include <cmath>

#include "seicp/error.hpp"

namespace seicp {

SeicpProblem::SeicpProblem(SymMatrix a, SymMatrix a_shifted, SymMatrix b, SpdCertificate spd_a,
                           SpdCertificate spd_b, double mu, bool reduced)
    : a_(std::move(a)),
      a_shifted_(std::move(a_shifted)),
      b_(std::move(b)),
      spd_a_(std::move(spd_a)),
      spd_b_(std::move(spd_b)),
      mu_(mu),
      reduced_(reduced) {
  kappa_a_ = condition_number(sym_eigen(a_shifted_, false));
  ellcone_ = std::make_shared<const EllConeSet>(b_, spd_b_);
  kappa_b_ = condition_number(ellcone_->eigen());
}

SeicpProblem shift_to_spd(const SymMatrix& a, const SymMatrix& b, const ShiftOptions& opts,
                          bool reduced_from_sqeicp) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidProblem, "A and B differ in size");
  if (!(opts.margin >= 0.0)) throw Error(ErrorKind::InvalidConfig, "shift margin must be >= 0");
  auto spd_b = require_spd(b, "B");

  double mu = 0.0;
  if (opts.mode == ShiftMode::Exact) {
    mu = std::max(0.0, -gen_eigen_min(a, spd_b)) + opts.margin;
  } else {
    const double lmin_a = sym_eigen(a, false).values.front();
    const double lmin_b = sym_eigen(b, false).values.front();
    if (lmin_a < 0.0) mu = std::abs(lmin_a) / lmin_b + opts.margin;
  }
  SymMatrix shifted = mu == 0.0 ? a : a.plus_scaled(mu, b);
  auto spd_a = cholesky(shifted);
  if (std::holds_alternative<NotSpd>(spd_a))
    throw Error(ErrorKind::InvalidProblem, "shifted A is not SPD; increase the shift margin");
  return SeicpProblem(a, std::move(shifted), b, std::get<SpdCertificate>(std::move(spd_a)),
                      std::move(spd_b), mu, reduced_from_sqeicp);
}

double rayleigh(const SeicpProblem& p, std::span<const double> x) {
  if (norm_inf(x) == 0.0) throw Error(ErrorKind::DegenerateIterate, "zero vector");
  return quad_form(p.shifted_a(), x) / quad_form(p.b(), x);
}

double complementarity_measure(std::span<const double> x, std::span<const double> w) {
  double xneg = 0.0, wneg = 0.0;
  for (double v : x) xneg += v < 0.0 ? v * v : 0.0;
  for (double v : w) wneg += v < 0.0 ? v * v : 0.0;
  return std::sqrt(xneg) + std::sqrt(wneg) + std::abs(dot(w, x));
}

double exponent_from_measure(double measure) {
  if (measure < 1e-16) return 16.0;
  return -std::log10(measure);
}

Feasibility feasibility_exponent(const SeicpProblem& p, std::span<const double> x,
                                 double lambda) {
  Feasibility f;
  const Vector bx = symv(p.b(), x);
  const Vector ax = symv(p.original_a(), x);
  f.w.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) f.w[i] = lambda * bx[i] - ax[i];
  f.measure = complementarity_measure(x, f.w);
  f.c = exponent_from_measure(f.measure);
  return f;
}

const char* to_string(Formulation f) { return f == Formulation::Lnp ? "lnp" : "qp"; }
const char* to_string(Algorithm a) { return a == Algorithm::Dca ? "dca" : "bdca"; }

std::optional<Formulation> parse_formulation(const std::string& s) {
  if (s == "lnp") return Formulation::Lnp;
  if (s == "qp") return Formulation::Qp;
  return std::nullopt;
}

std::optional<Algorithm> parse_algorithm(const std::string& s) {
  if (s == "dca") return Algorithm::Dca;
  if (s == "bdca") return Algorithm::Bdca;
  return std::nullopt;
}

}  // namespace seicp
