#include "seicp/rng.hpp"

namespace seicp {

namespace {

// SplitMix64 finalizer.
constexpr std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), key_(mix(seed ^ mix(stream + kGolden))) {}

Rng Rng::split(std::uint64_t stream) const { return Rng(seed_, stream); }

std::uint64_t Rng::next_u64() { return mix(key_ + kGolden * ++counter_); }

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

}  // namespace seicp
