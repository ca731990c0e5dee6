#include "seicp/bench.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "seicp/datasets.hpp"
#include "seicp/error.hpp"
#include "seicp/matrix_market.hpp"
#include "seicp/rng.hpp"

namespace seicp {

SolveReport run_solver(const SeicpProblem& p, std::span<const double> x0,
                       const SolveSettings& s) {
  if (s.model == Formulation::Lnp) {
    LnpConfig cfg;
    if (s.eps) cfg.eps = *s.eps;
    cfg.maxit = s.maxit;
    if (s.eta) cfg.eta = EtaPolicy::explicit_value(*s.eta);
    cfg.fista_backtracking = s.fista_backtracking;
    cfg.keep_trace = s.keep_trace;
    return solve_lnp(p, x0, cfg, s.algo);
  }
  QpConfig cfg;
  if (s.eps) cfg.eps = *s.eps;
  cfg.maxit = s.maxit;
  cfg.seed = s.seed;
  cfg.keep_trace = s.keep_trace;
  return solve_qp(p, x0, cfg, s.algo);
}

SqeicpRun solve_sqeicp_branch(const SqeicpProblem& p, Branch branch, std::span<const double> x0,
                              const SolveSettings& s) {
  const auto aug = build_augmented(p, branch);
  Vector start = initial_point_sqeicp(p, x0, branch);
  SqeicpRun run{{}, run_solver(aug.inner, start, s)};
  run.solution = map_back(p, aug, run.inner.x, run.inner.lambda_shifted);
  return run;
}

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) {
    out.push_back(trim(item));
  }
  return out;
}

double parse_number(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::ParseError, where + ": bad number '" + s + "'");
}

std::size_t parse_size(const std::string& s, const std::string& where) {
  const double v = parse_number(s, where);
  if (!(v >= 1.0) || v != std::floor(v))
    throw Error(ErrorKind::ParseError, where + ": size must be a positive integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

std::string InstanceSpec::label() const {
  switch (kind) {
    case Kind::RandEicp:
      return "RANDEICP(" + num(lo) + "," + num(hi) + "," + std::to_string(n) + ")";
    case Kind::RandQeicp:
      return "RANDQEICP(" + num(density) + "," + std::to_string(n) + ")";
    case Kind::Mtx: {
      const auto slash = path.find_last_of('/');
      return slash == std::string::npos ? path : path.substr(slash + 1);
    }
  }
  return "?";
}

InstanceSpec parse_instance(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorKind::ParseError, "instance '" + text + "': expected kind:args");
  const std::string kind = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  InstanceSpec spec;
  if (kind == "randeicp") {
    const auto f = split(args, ',');
    if (f.size() != 3) throw Error(ErrorKind::ParseError, "randeicp needs lo,hi,n");
    spec.kind = InstanceSpec::Kind::RandEicp;
    spec.lo = parse_number(f[0], text);
    spec.hi = parse_number(f[1], text);
    spec.n = parse_size(f[2], text);
    if (!(spec.lo < spec.hi)) throw Error(ErrorKind::InvalidConfig, text + ": need lo < hi");
  } else if (kind == "randqeicp") {
    const auto f = split(args, ',');
    if (f.size() != 2) throw Error(ErrorKind::ParseError, "randqeicp needs density,n");
    spec.kind = InstanceSpec::Kind::RandQeicp;
    spec.density = parse_number(f[0], text);
    spec.n = parse_size(f[1], text);
  } else if (kind == "mtx") {
    const auto f = split(args, ';');
    if (f.empty() || f[0].empty() || f.size() > 2)
      throw Error(ErrorKind::ParseError, "mtx needs <path>[;<pathB>]");
    spec.kind = InstanceSpec::Kind::Mtx;
    spec.path = f[0];
    if (f.size() == 2) spec.path_b = f[1];
  } else {
    throw Error(ErrorKind::ParseError, "unknown instance kind '" + kind + "'");
  }
  return spec;
}

BenchConfig parse_bench_config(std::istream& in, const std::string& source) {
  BenchConfig cfg;
  bool seen_models = false, seen_algos = false, seen_seeds = false, seen_branches = false;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    const std::string where = source + ":" + std::to_string(n);
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "name") {
      cfg.name = value;
    } else if (key == "instance") {
      cfg.instances.push_back(parse_instance(value));
    } else if (key == "seeds") {
      if (!seen_seeds) cfg.seeds.clear();
      seen_seeds = true;
      for (const auto& s : split(value, ',')) {
        // "a..b" expands to the inclusive range.
        if (const auto dots = s.find(".."); dots != std::string::npos) {
          const auto lo = static_cast<std::uint64_t>(parse_number(s.substr(0, dots), where));
          const auto hi = static_cast<std::uint64_t>(parse_number(s.substr(dots + 2), where));
          for (auto v = lo; v <= hi; ++v) cfg.seeds.push_back(v);
        } else {
          cfg.seeds.push_back(static_cast<std::uint64_t>(parse_number(s, where)));
        }
      }
    } else if (key == "models") {
      if (!seen_models) cfg.models.clear();
      seen_models = true;
      for (const auto& s : split(value, ',')) {
        const auto m = parse_formulation(s);
        if (!m) throw Error(ErrorKind::ParseError, where + ": unknown model '" + s + "'");
        cfg.models.push_back(*m);
      }
    } else if (key == "algos") {
      if (!seen_algos) cfg.algos.clear();
      seen_algos = true;
      for (const auto& s : split(value, ',')) {
        const auto a = parse_algorithm(s);
        if (!a) throw Error(ErrorKind::ParseError, where + ": unknown algo '" + s + "'");
        cfg.algos.push_back(*a);
      }
    } else if (key == "branches") {
      if (!seen_branches) cfg.branches.clear();
      seen_branches = true;
      for (const auto& s : split(value, ',')) {
        if (s == "g") cfg.branches.push_back(Branch::Positive);
        else if (s == "h") cfg.branches.push_back(Branch::Negative);
        else throw Error(ErrorKind::ParseError, where + ": unknown branch '" + s + "'");
      }
    } else if (key == "shift") {
      if (value == "exact") cfg.shift = ShiftMode::Exact;
      else if (value == "bound") cfg.shift = ShiftMode::Bound;
      else throw Error(ErrorKind::ParseError, where + ": shift must be exact or bound");
    } else if (key == "eps_lnp") {
      cfg.eps_lnp = parse_number(value, where);
    } else if (key == "eps_qp") {
      cfg.eps_qp = parse_number(value, where);
    } else if (key == "eta") {
      cfg.eta = parse_number(value, where);
    } else if (key == "fista") {
      if (value == "constant") cfg.fista_backtracking = false;
      else if (value == "backtracking") cfg.fista_backtracking = true;
      else throw Error(ErrorKind::ParseError, where + ": fista must be constant or backtracking");
    } else if (key == "maxit") {
      cfg.maxit = static_cast<int>(parse_size(value, where));
    } else if (key == "jobs") {
      cfg.jobs = static_cast<int>(parse_size(value, where));
    } else if (key == "output") {
      cfg.output = value;
    } else {
      throw Error(ErrorKind::ParseError, where + ": unknown key '" + key + "'");
    }
  }
  if (cfg.instances.empty()) throw Error(ErrorKind::InvalidConfig, source + ": no instances");
  if (cfg.seeds.empty() || cfg.models.empty() || cfg.algos.empty() || cfg.branches.empty())
    throw Error(ErrorKind::InvalidConfig, source + ": empty list");
  return cfg;
}

BenchConfig load_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return parse_bench_config(in, path);
}

namespace {

std::vector<ReportRow> run_group(const BenchConfig& cfg, const InstanceSpec& spec,
                                 std::uint64_t seed) {
  const std::string base = spec.label() + "#" + std::to_string(seed);
  std::vector<ReportRow> rows;
  auto fail_all = [&](const std::string& msg, std::size_t per_combo) {
    for (auto m : cfg.models)
      for (auto a : cfg.algos)
        for (std::size_t b = 0; b < per_combo; ++b) {
          ReportRow r;
          r.problem = per_combo > 1 || spec.kind == InstanceSpec::Kind::RandQeicp
                          ? base + "/" + to_string(cfg.branches[b])
                          : base;
          r.model = to_string(m);
          r.algo = to_string(a);
          r.error = msg;
          rows.push_back(std::move(r));
        }
  };

  Rng gen(seed, 0);
  Rng start_rng(seed, 1);
  auto settings_for = [&](Formulation m, Algorithm a) {
    SolveSettings s;
    s.model = m;
    s.algo = a;
    s.eps = m == Formulation::Lnp ? cfg.eps_lnp : cfg.eps_qp;
    if (m == Formulation::Lnp) s.eta = cfg.eta;
    s.fista_backtracking = cfg.fista_backtracking;
    s.maxit = cfg.maxit;
    s.seed = seed;
    return s;
  };

  if (spec.kind == InstanceSpec::Kind::RandQeicp) {
    std::optional<SqeicpProblem> prob;
    try {
      prob.emplace(gen_randqeicp(spec.density, spec.n, gen));
    } catch (const std::exception& e) {
      fail_all(e.what(), cfg.branches.size());
      return rows;
    }
    const Vector x0 = random_start(spec.n, start_rng);
    for (auto m : cfg.models)
      for (auto a : cfg.algos)
        for (auto br : cfg.branches) {
          ReportRow r;
          r.problem = base + "/" + to_string(br);
          r.model = to_string(m);
          r.algo = to_string(a);
          try {
            const auto run = solve_sqeicp_branch(*prob, br, x0, settings_for(m, a));
            r.lambda = run.solution.lambda_q;
            r.iters = run.inner.iterations;
            r.cpu_s = run.inner.cpu_seconds;
            r.c = run.solution.c;
            r.converged = run.inner.converged;
            const double check = sqeicp_feasibility(*prob, run.solution.x, r.lambda).c;
            if (std::abs(check - r.c) > 1e-9) r.error = "feasibility re-check mismatch";
          } catch (const std::exception& e) {
            r.error = e.what();
          }
          rows.push_back(std::move(r));
        }
    return rows;
  }

  std::optional<SeicpProblem> prob;
  try {
    SymMatrix a(1), b(1);
    if (spec.kind == InstanceSpec::Kind::RandEicp) {
      auto pair = gen_randeicp(spec.lo, spec.hi, spec.n, gen);
      a = std::move(pair.a);
      b = std::move(pair.b);
    } else {
      a = read_matrix_market(spec.path);
      b = spec.path_b.empty() ? SymMatrix::identity(a.size()) : read_matrix_market(spec.path_b);
    }
    prob.emplace(shift_to_spd(a, b, ShiftOptions{cfg.shift, 1.0}));
  } catch (const std::exception& e) {
    fail_all(e.what(), 1);
    return rows;
  }
  const Vector x0 = random_start(prob->size(), start_rng);
  for (auto m : cfg.models)
    for (auto a : cfg.algos) {
      ReportRow r;
      r.problem = base;
      r.model = to_string(m);
      r.algo = to_string(a);
      try {
        const auto rep = run_solver(*prob, x0, settings_for(m, a));
        r = make_row(base, rep);
        const double check = feasibility_exponent(*prob, rep.x, rep.lambda).c;
        if (std::abs(check - rep.c) > 1e-9) r.error = "feasibility re-check mismatch";
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      rows.push_back(std::move(r));
    }
  return rows;
}

}  // namespace

BenchSummary run_bench(const BenchConfig& cfg) {
  struct Group {
    const InstanceSpec* spec;
    std::uint64_t seed;
  };
  std::vector<Group> groups;
  for (const auto& spec : cfg.instances)
    for (auto seed : cfg.seeds) groups.push_back({&spec, seed});

  std::vector<std::vector<ReportRow>> out(groups.size());
  const int jobs = std::max(1, cfg.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
  for (std::ptrdiff_t g = 0; g < static_cast<std::ptrdiff_t>(groups.size()); ++g)
    out[g] = run_group(cfg, *groups[g].spec, groups[g].seed);

  std::vector<ReportRow> rows;
  for (auto& v : out)
    for (auto& r : v) rows.push_back(std::move(r));
  return summarize(std::move(rows));
}

}  // namespace seicp
