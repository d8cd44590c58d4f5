#pragma once

#include "orpoly/algebra.hpp"
#include "orpoly/measures.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace orpoly {

inline constexpr std::size_t kDefaultExhaustiveLimit = 20;

/// Number of points of each Hamming weight on which P differs from OR_n,
/// by exhaustive enumeration. Index w holds the count for weight w.
std::vector<std::uint64_t> disagreements_by_weight(const HypCoverPoly& poly,
                                                   std::size_t limit = kDefaultExhaustiveLimit);

/// Pr_{x ~ spec}[P(x) != OR_n(x)], exact. spec must be a measure on points
/// (mu or hard) over the same n as P.
Rational exact_error(const HypCoverPoly& poly, const MeasureSpec& spec,
                     std::size_t limit = kDefaultExhaustiveLimit);

/// Two-sided Hoeffding radius sqrt(range^2 ln(2/delta) / (2 trials)) for the
/// mean of `trials` i.i.d. samples taking values in an interval of length range.
double hoeffding_radius(std::uint64_t trials, double delta, double range = 1.0);

struct ErrorReport {
  std::optional<Rational> exact_error;
  double mc_estimate = 0;
  double confidence_radius = 0;
  double delta = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
  std::optional<MeasureSpec> distribution;

  /// exact_error, when known, lies within the confidence interval.
  bool consistent() const;
};

/// Draws one polynomial from a seed.
using PolySampler = std::function<HypCoverPoly(std::uint64_t seed)>;

/// Estimates Pr_P[P(x) != OR(x)] over `trials` polynomials; trial i uses
/// sampler(derive_seed(seed, i)). The estimate does not depend on `jobs`.
ErrorReport pointwise_error_mc(const PolySampler& sampler, std::span<const std::uint8_t> x,
                               std::uint64_t trials, double delta, std::uint64_t seed, unsigned jobs = 1);

/// sum_{i=0}^{min(k,n)} C(n, i).
BigInt binom_le(std::uint64_t n, std::uint64_t k);

/// log2 binom_le(n, floor(log2(1/eps))).
double degree_target(std::uint64_t n, const Rational& eps);

struct BinomBoundsReport {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  BigInt value;        ///< binom_le(n, k)
  double lower = 0;    ///< (n/k)^k
  double upper = 0;    ///< (e n/k)^k
  bool lower_ok = false;
  bool upper_ok = false;
  bool pass() const { return lower_ok && upper_ok; }
};

/// Checks (n/k)^k <= binom_le(n, k) <= (e n / k)^k for 1 <= k <= n/2. The lower
/// comparison is exact; the upper one uses a rational lower bound on e, so a
/// pass is never an artifact of rounding.
BinomBoundsReport check_binom_bounds(std::uint64_t n, std::uint64_t k);

}  // namespace orpoly
