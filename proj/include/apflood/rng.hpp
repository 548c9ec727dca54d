#pragma once

#include <cstdint>
#include <random>

namespace apflood {

/// SplitMix64 finalizer. Used to derive independent sub-seeds from a
/// master seed and an index.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index = 0) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seeded generator for everything stochastic in a run.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The conversions below are written out by hand rather than
/// going through <random> distributions, whose algorithms are
/// implementation-defined, so a seed reproduces the same run on any
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Fair coin.
  bool coin() { return (engine_() >> 63) != 0; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Lemire-style rejection keeps the result unbiased.
    const std::uint64_t limit = -bound % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      const u128 m = static_cast<u128>(x) * bound;
      if (static_cast<std::uint64_t>(m) >= limit) return static_cast<std::uint64_t>(m >> 64);
    }
  }

 private:
  __extension__ using u128 = unsigned __int128;
  std::mt19937_64 engine_;
};

}  // namespace apflood
