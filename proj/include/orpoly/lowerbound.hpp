#pragma once

#include "orpoly/algebra.hpp"

#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace orpoly {

/// The universal constant of the potential bound: 4 + pi^2/6.
inline constexpr double kPotentialConstant = 4.0 + std::numbers::pi * std::numbers::pi / 6.0;

/// Relative slack used when comparing floating-point potentials with bounds.
inline constexpr double kRelTol = 1e-9;

/// 0 for an empty support, else 1 / log2^2(2 * support).
double support_weight(std::uint64_t support);
double weight(const LinearForm& form);

/// Linear forms (zero-support forms allowed) over variables 1..n.
struct WeightedFormSet {
  std::size_t n = 0;
  std::vector<LinearForm> forms;

  double total_weight() const;
};

/// E_{rho ~ rho_p}[w(L|rho)] for a form with support size k and
/// p = 2^-(level-1). The binomial probabilities are exact; only the final
/// weighting is done in floating point. Requires level >= 1.
double expected_restricted_weight(std::uint64_t k, unsigned level);

/// Phi_level(S) = sum_i E_rho[w(L_i|rho)], rho ~ rho_{2^-(level-1)}.
double potential_exact(const WeightedFormSet& set, unsigned level);

struct PotentialEstimate {
  double estimate = 0;
  double radius = 0;  ///< Hoeffding radius at `delta`
  double delta = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo version of potential_exact: mean of sum_i w(L_i|rho) over
/// `trials` sampled restrictions. Each sample lies in [0, |S|].
PotentialEstimate potential_mc(const WeightedFormSet& set, unsigned level, std::uint64_t trials,
                               std::uint64_t seed, double delta = 0.05);

/// Mean of potential_exact over the hard index set of (n, eps).
double avg_potential(const WeightedFormSet& set, std::size_t n, const Rational& eps);

/// kPotentialConstant * t / |I|.
double potential_bound(std::size_t forms, std::size_t index_count);

struct PartitionResult {
  std::vector<std::size_t> primary;   ///< input indices moved out, in move order
  std::vector<std::size_t> residual;  ///< remaining input indices, ascending
  std::size_t iterations = 0;
};

/// sum_i w(L_i) < R / log2^2(2 R K).
bool partition_hypothesis(std::span<const LinearForm> forms, std::uint64_t K, std::uint64_t R);

/// Greedy partition: while some residual form has at most K support variables
/// outside the union of the primary supports, move the lowest-indexed such
/// form to the primary set. On exit every residual form has more than K
/// fresh variables; under partition_hypothesis the primary set has at most R
/// forms.
PartitionResult partition(std::span<const LinearForm> forms, std::uint64_t K, std::uint64_t R);

struct PartitionCheck {
  bool disjoint_cover = false;  ///< primary and residual split the input exactly
  bool residuals_ok = false;    ///< every residual has >= K fresh variables
  bool size_ok = false;         ///< |primary| <= R
};

/// Recomputes the partition postconditions from the raw forms.
PartitionCheck check_partition(std::span<const LinearForm> forms, const PartitionResult& result,
                               std::uint64_t K, std::uint64_t R);

struct ThresholdResult {
  std::uint64_t t = 0;
  std::uint64_t R = 0;            ///< floor(log2(1/(8 eps)))
  std::size_t index_count = 0;  ///< |I_eps|
};

/// Largest t with 2Ct/|I| < R / log2^2(8 R t^2), K = 4t^2; t = 0 always
/// qualifies. Requires eps <= 1/8 and a nonempty hard index set.
ThresholdResult threshold_t(std::size_t n, const Rational& eps);

struct TailReport {
  std::uint64_t k = 0;
  unsigned level_cap = 0;
  double t1 = 0;  ///< levels > floor(log2 k), exact up to level_cap plus analytic tail
  double t2 = 0;  ///< levels 1..floor(log2 k)
  double t1_bound = 2.0;
  double t2_bound = 0;  ///< pi^2/6 + e/(e-1)
  double t2_reference = 0;  ///< the union of harmonic and Chernoff terms bounding t2
  bool t1_ok = false;
  bool t2_ok = false;
  bool pass() const { return t1_ok && t2_ok; }
};

/// Sums the per-level expected weights of a single form with support k on
/// both sides of log2 k and compares them with their bounds. level_cap = 0
/// selects floor(log2 k) + 60.
TailReport verify_tail_claims(std::uint64_t k, unsigned level_cap = 0);

}  // namespace orpoly
