#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "seicp/bench.hpp"
#include "seicp/datasets.hpp"
#include "seicp/error.hpp"
#include "seicp/matrix_market.hpp"
#include "seicp/rng.hpp"

using namespace seicp;

namespace {

constexpr int kExitConverged = 0;
constexpr int kExitInput = 1;
constexpr int kExitMaxit = 2;
constexpr int kExitReduction = 3;

struct CommonFlags {
  std::string model = "lnp";
  std::string algo = "bdca";
  std::optional<double> eps;
  int maxit = 10000;
  std::optional<double> eta;
  bool backtracking = false;
  std::uint64_t seed = 0;
  std::string out = "json";
  bool trace = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--model", f.model, "lnp or qp")->check(CLI::IsMember({"lnp", "qp"}));
  cmd->add_option("--algo", f.algo, "dca or bdca")->check(CLI::IsMember({"dca", "bdca"}));
  cmd->add_option("--eps", f.eps, "termination tolerance (default 1e-8 lnp, 1e-6 qp)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--maxit", f.maxit, "outer iteration cap")->check(CLI::PositiveNumber);
  cmd->add_option("--eta", f.eta, "explicit eta for the lnp model")->check(CLI::PositiveNumber);
  cmd->add_flag("--backtracking", f.backtracking, "backtracking stepsize in the lnp subproblem");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--out", f.out, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  cmd->add_flag("--trace", f.trace, "include the per-iteration trace (json only)");
}

SolveSettings settings(const CommonFlags& f) {
  SolveSettings s;
  s.model = *parse_formulation(f.model);
  s.algo = *parse_algorithm(f.algo);
  s.eps = f.eps;
  s.maxit = f.maxit;
  s.eta = f.eta;
  s.fista_backtracking = f.backtracking;
  s.seed = f.seed;
  s.keep_trace = f.trace;
  return s;
}

std::vector<double> parse_list(const std::string& text, std::size_t count, const char* what) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, std::string(what) + ": bad number '" + item + "'");
    }
  }
  if (v.size() != count)
    throw Error(ErrorKind::InvalidInput,
                std::string(what) + " expects " + std::to_string(count) + " comma-separated values");
  return v;
}

std::size_t to_size(double v, const char* what) {
  if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v)))
    throw Error(ErrorKind::InvalidInput, std::string(what) + ": size must be a positive integer");
  return static_cast<std::size_t>(v);
}

void emit(const std::vector<ReportRow>& rows, const std::vector<nlohmann::json>& full,
          const std::string& out) {
  if (out == "csv") {
    std::cout << render_csv(rows);
  } else if (out == "md") {
    std::cout << render_markdown(summarize(rows));
  } else if (full.size() == 1) {
    std::cout << full.front().dump(2) << '\n';
  } else {
    std::cout << nlohmann::json(full).dump(2) << '\n';
  }
}

int solve_seicp_cmd(const std::string& mtx, const std::string& mtx_b, const std::string& rand,
                    const std::string& shift, const CommonFlags& f) {
  SymMatrix a(1), b(1);
  std::string id;
  if (!mtx.empty()) {
    a = read_matrix_market(mtx);
    b = mtx_b.empty() ? SymMatrix::identity(a.size()) : read_matrix_market(mtx_b);
    id = InstanceSpec{InstanceSpec::Kind::Mtx, 0, 0, 0, 0, mtx, mtx_b}.label();
  } else {
    const auto v = parse_list(rand, 3, "--rand");
    InstanceSpec spec;
    spec.lo = v[0];
    spec.hi = v[1];
    spec.n = to_size(v[2], "--rand");
    Rng gen(f.seed, 0);
    auto pair = gen_randeicp(spec.lo, spec.hi, spec.n, gen);
    a = std::move(pair.a);
    b = std::move(pair.b);
    id = spec.label() + "#" + std::to_string(f.seed);
  }
  const auto p = shift_to_spd(a, b, {shift == "bound" ? ShiftMode::Bound : ShiftMode::Exact, 1.0});
  Rng start_rng(f.seed, 1);
  const Vector x0 = random_start(p.size(), start_rng);
  const auto rep = run_solver(p, x0, settings(f));
  const double check = feasibility_exponent(p, rep.x, rep.lambda).c;
  if (std::abs(check - rep.c) > 1e-9)
    throw Error(ErrorKind::EigenFailure, "feasibility re-check disagrees with the solver");
  emit({make_row(id, rep)}, {to_json(id, rep, f.trace)}, f.out);
  return rep.converged ? kExitConverged : kExitMaxit;
}

int solve_sqeicp_cmd(const std::string& rand_q, const std::string& branch, const CommonFlags& f) {
  const auto v = parse_list(rand_q, 2, "--rand-q");
  const std::size_t n = to_size(v[1], "--rand-q");
  Rng gen(f.seed, 0);
  const auto p = gen_randqeicp(v[0], n, gen);
  Rng start_rng(f.seed, 1);
  const Vector x0 = random_start(n, start_rng);
  const std::string base = "RANDQEICP(" + CLI::detail::to_string(v[0]) + "," +
                           std::to_string(n) + ")#" + std::to_string(f.seed);

  std::vector<Branch> branches;
  if (branch != "h") branches.push_back(Branch::Positive);
  if (branch != "g") branches.push_back(Branch::Negative);

  std::vector<ReportRow> rows;
  std::vector<nlohmann::json> full;
  bool all_converged = true;
  for (auto br : branches) {
    const auto run = solve_sqeicp_branch(p, br, x0, settings(f));
    const std::string id = base + "/" + to_string(br);
    ReportRow r = make_row(id, run.inner);
    r.lambda = run.solution.lambda_q;
    r.c = run.solution.c;
    if (std::abs(sqeicp_feasibility(p, run.solution.x, r.lambda).c - r.c) > 1e-9)
      throw Error(ErrorKind::EigenFailure, "feasibility re-check disagrees with the solver");
    auto j = to_json(r);
    j["branch"] = to_string(br);
    j["lambda_inner"] = run.solution.lambda_inner;
    j["split_residual"] = run.solution.split_residual;
    j["v_residual"] = run.solution.v_residual;
    j["x"] = run.solution.x;
    if (f.trace) j["trace"] = to_json(id, run.inner, true)["trace"];
    all_converged = all_converged && r.converged;
    rows.push_back(std::move(r));
    full.push_back(std::move(j));
  }
  emit(rows, full, f.out);
  return all_converged ? kExitConverged : kExitMaxit;
}

int bench_cmd(const std::string& path, int jobs) {
  auto cfg = load_bench_config(path);
  if (jobs > 0) cfg.jobs = jobs;
  const auto summary = run_bench(cfg);
  const std::string csv = render_csv(summary.rows);
  const std::string md = render_markdown(summary);
  if (!cfg.output.empty()) {
    for (const auto& [ext, text] : {std::pair{".csv", csv}, std::pair{".md", md}}) {
      std::ofstream os(cfg.output + ext);
      if (!os) throw Error(ErrorKind::Io, "cannot write " + cfg.output + ext);
      os << text;
    }
  }
  std::cout << md;
  if (summary.failures > 0) std::cerr << summary.failures << " row(s) failed\n";
  return kExitConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue complementarity solvers (DCA / BDCA)"};
  app.require_subcommand(1);

  CommonFlags seicp_flags;
  std::string mtx, mtx_b, rand, shift = "exact";
  auto* seicp = app.add_subcommand("solve-seicp", "solve one SEiCP instance");
  auto* mtx_opt = seicp->add_option("--mtx", mtx, "Matrix Market file for A");
  seicp->add_option("--mtx-b", mtx_b, "Matrix Market file for B (default identity)")
      ->needs(mtx_opt);
  auto* rand_opt = seicp->add_option("--rand", rand, "random instance lo,hi,n");
  mtx_opt->excludes(rand_opt);
  seicp->add_option("--shift", shift, "exact or bound")->check(CLI::IsMember({"exact", "bound"}));
  add_common(seicp, seicp_flags);

  CommonFlags sq_flags;
  std::string rand_q, branch = "g";
  auto* sq = app.add_subcommand("solve-sqeicp", "solve a random SQEiCP through its reduction");
  sq->add_option("--rand-q", rand_q, "random instance density,n")->required();
  sq->add_option("--branch", branch, "g, h or both")->check(CLI::IsMember({"g", "h", "both"}));
  add_common(sq, sq_flags);

  std::string config;
  int jobs = 0;
  auto* bench = app.add_subcommand("bench", "run a benchmark battery");
  bench->add_option("config", config, "config file")->required();
  bench->add_option("--jobs", jobs, "instances solved concurrently")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*seicp) {
      if (mtx.empty() == rand.empty()) {
        std::cerr << "solve-seicp: exactly one of --mtx or --rand is required\n";
        return kExitInput;
      }
      return solve_seicp_cmd(mtx, mtx_b, rand, shift, seicp_flags);
    }
    if (*sq) return solve_sqeicp_cmd(rand_q, branch, sq_flags);
    return bench_cmd(config, jobs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ReductionViolation ? kExitReduction : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
