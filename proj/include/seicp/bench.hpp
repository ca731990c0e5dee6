#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seicp/lnp.hpp"
#include "seicp/qp.hpp"
#include "seicp/report.hpp"
#include "seicp/sqeicp.hpp"

namespace seicp {

/// Solver settings shared by the CLI and the bench runner. Unset fields take
/// the model's defaults (eps 1e-8 for lnp, 1e-6 for qp).
struct SolveSettings {
  Formulation model = Formulation::Lnp;
  Algorithm algo = Algorithm::Bdca;
  std::optional<double> eps;
  int maxit = 10000;
  std::optional<double> eta;
  bool fista_backtracking = false;
  std::uint64_t seed = 0;
  bool keep_trace = false;
};

SolveReport run_solver(const SeicpProblem& p, std::span<const double> x0, const SolveSettings& s);

struct SqeicpRun {
  SqeicpSolution solution;
  SolveReport inner;
};

/// Builds the augmented problem for the branch, starts from the mapped x0 and
/// maps the result back. Propagates ReductionViolation.
SqeicpRun solve_sqeicp_branch(const SqeicpProblem& p, Branch branch, std::span<const double> x0,
                              const SolveSettings& s);

/// One instance family in a bench config.
struct InstanceSpec {
  enum class Kind { RandEicp, RandQeicp, Mtx };
  Kind kind = Kind::RandEicp;
  double lo = -1.0, hi = 1.0;  ///< RandEicp interval
  double density = 0.1;        ///< RandQeicp
  std::size_t n = 0;
  std::string path;            ///< Mtx: A file; B = I unless path_b is set
  std::string path_b;

  std::string label() const;
};

/// Parses "randeicp:-1,1,50", "randqeicp:0.1,50" or "mtx:<path>[;<pathB>]".
InstanceSpec parse_instance(const std::string& text);

struct BenchConfig {
  std::string name = "bench";
  std::vector<InstanceSpec> instances;
  std::vector<std::uint64_t> seeds{0};
  std::vector<Formulation> models{Formulation::Lnp};
  std::vector<Algorithm> algos{Algorithm::Dca, Algorithm::Bdca};
  std::vector<Branch> branches{Branch::Positive};
  ShiftMode shift = ShiftMode::Exact;
  std::optional<double> eps_lnp;
  std::optional<double> eps_qp;
  std::optional<double> eta;
  bool fista_backtracking = false;
  int maxit = 10000;
  int jobs = 1;
  std::string output;  ///< file prefix for .csv and .md; empty = stdout only
};

/// Key-value text format, one "key = value" per line, '#' comments. List
/// values are comma separated, except `instance`, which may repeat.
BenchConfig parse_bench_config(std::istream& in, const std::string& source = "<config>");
BenchConfig load_bench_config(const std::string& path);

/// Runs every (instance, seed, model, algo[, branch]) combination. Rows come
/// out in that nested order regardless of `jobs`. Failures become rows with
/// the error field set. Every reported c is recomputed from the returned pair
/// before it is written; a mismatch is recorded as an error.
BenchSummary run_bench(const BenchConfig& cfg);

}  // namespace seicp
