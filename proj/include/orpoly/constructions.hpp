#pragma once

#include "orpoly/algebra.hpp"

#include <cstddef>
#include <cstdint>

namespace orpoly {

/// Degree-n polynomial with forms (1/i) * (x_1 + ... + x_n), i = 1..n. It
/// computes OR_n exactly on the whole cube.
HypCoverPoly exact_or_poly(std::size_t n);

/// The first `slices` forms of exact_or_poly(n): equals 1 on every input of
/// Hamming weight 1..slices and 0 at the origin.
HypCoverPoly slice_cover_poly(std::size_t n, std::size_t slices);

/// Probability that a random subset S (each index kept with probability
/// 2^-epoch) has L_S(x) = 1 for an input of Hamming weight m:
///   (m / 2^epoch) * (1 - 2^-epoch)^(m - 1),  with 0^0 = 1.
Rational epoch_hit_prob(std::uint64_t m, unsigned epoch);

/// Number t of independent epoch forms so that (3/4)^t <= eps; the smallest
/// such t. Accepts eps in (0, 1/2].
unsigned epoch_form_count(const Rational& eps);

/// Highest epoch index used for n inputs. Epoch l draws subsets at rate 2^-l
/// and is responsible for weights in [2^l, 2^(l+1)); the top epoch also owns
/// weights up to n. Requires n >= 2.
unsigned top_epoch(std::size_t n);

/// Epoch responsible for weight m when the available epochs are lo..hi:
/// floor(log2 m) clamped into [lo, hi].
unsigned epoch_for_weight(std::uint64_t m, unsigned lo, unsigned hi);

/// floor(log2(1/eps)) for eps in (0, 1).
unsigned inv_log2_floor(const Rational& eps);

/// ceil(log2(log2(1/eps))) for eps in (0, 1/2).
unsigned inv_loglog2_ceil(const Rational& eps);

/// Samples epoch_form_count(eps) independent subset forms L_S = sum_{i in S} x_i,
/// each index kept with probability 2^-epoch. Empty subsets are redrawn, so
/// every form is nonzero and the degree is exactly epoch_form_count(eps).
HypCoverPoly sample_epoch_poly(std::size_t n, unsigned epoch, const Rational& eps, std::uint64_t seed);

/// Beigel-Reingold-Spielman / Tarui construction: OR of one sampled epoch
/// polynomial per epoch 0..top_epoch(n). Epoch l is drawn with seed
/// derive_seed(seed, l).
HypCoverPoly sample_brs_tarui(std::size_t n, const Rational& eps, std::uint64_t seed);

std::size_t brs_tarui_degree(std::size_t n, const Rational& eps);

/// Shape of the eps-dependent construction for given (n, eps).
struct ImprovedPlan {
  std::size_t n = 0;
  unsigned slices = 0;           ///< floor(log2(1/eps)): weights covered exactly
  unsigned first_epoch = 0;      ///< ceil(log2 log2(1/eps))
  unsigned last_epoch = 0;       ///< top_epoch(n)
  unsigned forms_per_epoch = 0;  ///< epoch_form_count(eps)

  unsigned epoch_count() const { return last_epoch >= first_epoch ? last_epoch - first_epoch + 1 : 0; }
  std::size_t degree() const { return slices + static_cast<std::size_t>(epoch_count()) * forms_per_epoch; }
};

/// Validates n >= 2 and eps in [2^(-n/2), 1/2).
ImprovedPlan improved_plan(std::size_t n, const Rational& eps);

/// P = 1 - (1 - P')(1 - P''): P'' = slice_cover_poly(n, slices) handles the
/// low weights deterministically and P' ORs epoch polynomials for epochs
/// first_epoch..last_epoch (seeds derive_seed(seed, l)).
HypCoverPoly sample_improved(std::size_t n, const Rational& eps, std::uint64_t seed);

}  // namespace orpoly
