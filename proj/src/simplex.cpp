#include "seicp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "seicp/error.hpp"

namespace seicp {

Vector project_simplex(std::span<const double> v, ProjectionStats* stats) {
  const std::size_t n = v.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "cannot project an empty vector");
  for (double x : v)
    if (!std::isfinite(x)) throw Error(ErrorKind::InvalidInput, "non-finite entry");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::size_t comparisons = 0;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    ++comparisons;
    return v[a] > v[b];
  });

  // N = max{k : (sum_{r<=k} z_r - 1) / k < z_k}; the condition holds on a prefix.
  double prefix = 0.0;
  double threshold = 0.0;
  std::size_t scans = 0;
  for (std::size_t k = 0; k < n; ++k) {
    ++scans;
    const double z = v[order[k]];
    prefix += z;
    const double t = (prefix - 1.0) / static_cast<double>(k + 1);
    if (t < z)
      threshold = t;
    else
      break;
  }

  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::max(v[i] - threshold, 0.0);
  if (stats) {
    stats->comparisons = comparisons;
    stats->scans = scans;
  }
  return out;
}

bool on_simplex(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) {
    if (v < 0.0) return false;
    s += v;
  }
  return std::abs(s - 1.0) <= 1e-12 * static_cast<double>(x.size());
}

}  // namespace seicp
