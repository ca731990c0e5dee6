// Serial reference vs OpenMP kernels: wall time per call and a bitwise check.
//   kernel_bench [--sizes 128,256,512] [--reps 20] [--threads T]

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <vector>

#include "seicp/kernels.hpp"
#include "seicp/linalg.hpp"
#include "seicp/rng.hpp"

using namespace seicp;

namespace {

double seconds_per_call(int reps, const std::function<void()>& f) {
  f();
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP dense kernels"};
  std::vector<std::size_t> sizes{128, 256, 512};
  int reps = 20;
  int threads = 0;
  app.add_option("--sizes", sizes, "matrix orders, comma separated")->delimiter(',');
  app.add_option("--reps", reps, "timed repetitions per kernel")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "OpenMP threads for the parallel kernels")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) kernels::set_threads(threads);

  std::printf("threads=%d\n", kernels::max_threads());
  std::printf("%-20s %6s %12s %12s %8s %s\n", "kernel", "n", "serial_s", "omp_s", "speedup",
              "bitwise");
  Rng rng(2024);
  bool all_same = true;
  for (std::size_t n : sizes) {
    std::vector<double> m(n * n), x(n), ys(n), yp(n);
    for (auto& v : m) v = rng.uniform(-1.0, 1.0);
    for (auto& v : x) v = rng.uniform(-1.0, 1.0);

    // Well-conditioned lower factor from an SPD matrix.
    SymMatrix spd = SymMatrix::identity(n).scaled(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) spd.set(i, j, rng.uniform(-0.5, 0.5));
    const auto cert = require_spd(spd, "bench matrix");
    const auto l = cert.factor();

    auto report = [&](const char* name, double ts, double tp, bool same) {
      all_same = all_same && same;
      std::printf("%-20s %6zu %12.3e %12.3e %8.2f %s\n", name, n, ts, tp, ts / tp,
                  same ? "yes" : "NO");
    };

    {
      const double ts = seconds_per_call(reps, [&] { kernels::serial::gemv(n, m, x, ys); });
      const double tp = seconds_per_call(reps, [&] { kernels::omp::gemv(n, m, x, yp); });
      report("gemv", ts, tp, same_bits(ys, yp));
    }
    {
      std::vector<double> bs, bp;
      const double ts = seconds_per_call(reps, [&] {
        bs = m;
        kernels::serial::lower_solve_columns(n, l, bs);
      });
      const double tp = seconds_per_call(reps, [&] {
        bp = m;
        kernels::omp::lower_solve_columns(n, l, bp);
      });
      report("lower_solve_columns", ts, tp, same_bits(bs, bp));
    }
    {
      std::vector<double> ts_out(n * n), tp_out(n * n);
      const double ts = seconds_per_call(reps, [&] { kernels::serial::transpose(n, m, ts_out); });
      const double tp = seconds_per_call(reps, [&] { kernels::omp::transpose(n, m, tp_out); });
      report("transpose", ts, tp, same_bits(ts_out, tp_out));
    }
  }
  return all_same ? 0 : 1;
}
