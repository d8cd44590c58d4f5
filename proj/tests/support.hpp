#pragma once

// Test-only helpers: brute-force enumeration and random instance generators.

#include "orpoly/algebra.hpp"
#include "orpoly/random.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace orpoly::testing {

inline Rational fraction(const BigInt& num, const BigInt& den) {
  Rational r{num, den};
  r.canonicalize();
  return r;
}

inline Rational ratio(long num, long den) { return fraction(BigInt(num), BigInt(den)); }

inline Point point_from_mask(std::uint64_t mask, std::size_t n) {
  Point x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1U;
  return x;
}

inline std::vector<Point> all_points(std::size_t n) {
  std::vector<Point> pts;
  pts.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) pts.push_back(point_from_mask(m, n));
  return pts;
}

inline std::size_t weight_of(const Point& x) {
  std::size_t w = 0;
  for (auto b : x) w += b;
  return w;
}

/// Random form over 1..n: each variable kept with probability 1/2, small
/// signed rational coefficients, optional constant.
inline LinearForm random_form(Rng& rng, std::size_t n, bool affine = false) {
  std::map<Var, Rational> coeffs;
  for (std::size_t v = 1; v <= n; ++v) {
    if (rng.below(2) == 0) continue;
    long num = static_cast<long>(rng.below(7)) - 3;
    unsigned long den = 1 + rng.below(4);
    coeffs[static_cast<Var>(v)] = Rational(BigInt(num), BigInt(den));
  }
  Rational constant = 0;
  if (affine && rng.below(2) == 0) {
    constant = Rational(BigInt(static_cast<long>(rng.below(5)) - 2), BigInt(1 + rng.below(3)));
  }
  return LinearForm(std::move(coeffs), constant);
}

/// Subset-sum form sum_{i in S} x_i with a uniformly random nonempty S of
/// size `size` drawn from 1..n.
inline LinearForm random_subset_form(Rng& rng, std::size_t n, std::size_t size) {
  std::vector<Var> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Var>(i + 1);
  for (std::size_t i = 0; i < size; ++i) {
    const auto j = i + rng.below(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  return LinearForm::sum_of(pool);
}

}  // namespace orpoly::testing
