#pragma once

#include "orpoly/rational.hpp"

#include <cstdint>
#include <random>

namespace orpoly {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based child seed: task `index` of a run with master seed `master`
/// always gets the same seed, independent of how tasks are scheduled.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master ^ mix64(index + 0xD1B54A32D192ED03ULL));
}

/// Seeded generator. The engine is std::mt19937_64, whose output sequence is
/// fixed by the standard; the draws below avoid std::*_distribution so that
/// results are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// True with probability exactly 2^-k.
  bool one_in_pow2(unsigned k);

  /// True with probability exactly p, p in [0, 1]. The denominator of p must
  /// fit in 64 bits.
  bool bernoulli(const Rational& p);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

}  // namespace orpoly
