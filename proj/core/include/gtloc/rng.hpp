#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace gtloc {

/// Deterministic random source. std::mt19937 output is fully specified by the
/// standard, but the standard distributions are not; the transforms below are
/// written out explicitly so that streams are identical across standard
/// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(static_cast<std::uint32_t>(seed ^ (seed >> 32))) {}

  std::uint32_t next_u32() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return (static_cast<double>(gen_()) + 0.5) * 0x1p-32; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller. Always consumes exactly two draws.
  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double gaussian(double mean, double std) { return mean + std * gaussian(); }

  /// Uniform index in [0, n). Multiply-shift; bias is O(n / 2^32).
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>((static_cast<std::uint64_t>(gen_()) * n) >> 32);
  }

  /// In-place Fisher-Yates. std::shuffle is implementation-defined, this is not.
  template <class It>
  void shuffle(It first, It last) {
    const auto n = static_cast<std::size_t>(last - first);
    for (std::size_t i = n; i > 1; --i) {
      std::swap(first[i - 1], first[uniform_index(i)]);
    }
  }

 private:
  std::mt19937 gen_;
};

/// Derives independent sub-seeds from a master seed and a role tag
/// (FNV-1a over the tag, then a splitmix64 finalizer).
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : tag) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (h ^ (index + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace gtloc
