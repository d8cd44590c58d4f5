#pragma once

#include "orpoly/algebra.hpp"
#include "orpoly/random.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orpoly {

enum class MeasureKind { mu, rho, hard };

std::string_view to_string(MeasureKind kind);
MeasureKind parse_measure_kind(std::string_view name);

/// mu: p-random assignment (each x_i = 1 with probability p).
/// rho: p-random (0,*)-restriction (each x_i = * with probability p, else 0).
/// hard: uniform mixture of mu_{2^-l} over l in the hard index set.
struct MeasureSpec {
  MeasureKind kind = MeasureKind::mu;
  std::size_t n = 0;
  Rational p = 0;    ///< mu, rho
  Rational eps = 0;  ///< hard

  static MeasureSpec mu(std::size_t n, Rational p);
  static MeasureSpec rho(std::size_t n, Rational p);
  static MeasureSpec hard(std::size_t n, Rational eps);

  /// Probability of a single point of Hamming weight w (mu and hard only).
  Rational point_mass(std::size_t weight) const;
};

/// Throws unless eps lies in [2^(-n/2), 1/2).
void require_hard_eps(std::size_t n, const Rational& eps);

/// {1, ..., floor(log2 n - log2 log2(1/eps))}, decided in exact arithmetic.
std::vector<unsigned> hard_index_set(std::size_t n, const Rational& eps);

Rational mu_mass(const Rational& p, std::span<const std::uint8_t> x);
Rational mu_point_mass(const Rational& p, std::size_t n, std::size_t weight);

Rational hard_mass(std::size_t n, const Rational& eps, std::span<const std::uint8_t> x);
Rational hard_point_mass(std::size_t n, const Rational& eps, std::size_t weight);

Point sample_mu(const Rational& p, std::size_t n, Rng& rng);
Restriction sample_rho(const Rational& p, std::size_t n, Rng& rng);
Point sample_hard(std::size_t n, const Rational& eps, Rng& rng);

Point sample_mu(const Rational& p, std::size_t n, std::uint64_t seed);
Restriction sample_rho(const Rational& p, std::size_t n, std::uint64_t seed);
Point sample_hard(std::size_t n, const Rational& eps, std::uint64_t seed);

/// Exact law of "draw rho ~ rho_{2p}, then set its stars by fair coins",
/// computed by enumerating every (restriction, filling) pair. Entry `mask`
/// is the probability of the point whose bit i is variable i + 1.
/// Requires p in [0, 1/2] and n <= 16.
std::vector<Rational> composed_restriction_law(const Rational& p, std::size_t n);

}  // namespace orpoly
