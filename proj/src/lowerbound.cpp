#include "orpoly/lowerbound.hpp"

#include "orpoly/analysis.hpp"
#include "orpoly/measures.hpp"
#include "orpoly/random.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace orpoly {

double support_weight(std::uint64_t support) {
  if (support == 0) return 0.0;
  const double l = std::log2(2.0 * static_cast<double>(support));
  return 1.0 / (l * l);
}

double weight(const LinearForm& form) { return support_weight(form.support_size()); }

double WeightedFormSet::total_weight() const {
  double acc = 0;
  for (const auto& f : forms) acc += weight(f);
  return acc;
}

namespace {

// Above this support size the exact numerators below cost O(k^2) limb
// operations; the log-domain pmf is used instead.
constexpr std::uint64_t kExactPmfLimit = 4096;

double log_domain_expected_weight(std::uint64_t k, unsigned level) {
  const double p = std::ldexp(1.0, 1 - static_cast<int>(level));
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  const double kd = static_cast<double>(k);
  const double lk = std::lgamma(kd + 1);
  double acc = 0;
  for (std::uint64_t j = 1; j <= k; ++j) {
    const double jd = static_cast<double>(j);
    const double lpmf = lk - std::lgamma(jd + 1) - std::lgamma(kd - jd + 1) + jd * lp + (kd - jd) * lq;
    if (lpmf < -745) continue;
    acc += std::exp(lpmf) * support_weight(j);
  }
  return acc;
}

double compute_expected_weight(std::uint64_t k, unsigned level) {
  if (level == 1 || k == 0) return support_weight(k);
  if (k > kExactPmfLimit) return log_domain_expected_weight(k, level);
  // Survivors ~ Binomial(k, 1/q), q = 2^(level-1):
  //   Pr[j] = C(k, j) (q-1)^(k-j) / q^k.
  // N_j = C(k, j) (q-1)^(k-j) is tracked exactly via
  //   N_{j+1} = N_j (k-j) / ((j+1)(q-1)).
  const unsigned shift = level - 1;
  BigInt q = 1;
  mpz_mul_2exp(q.get_mpz_t(), q.get_mpz_t(), shift);
  const BigInt qm1 = q - 1;
  BigInt numer;
  mpz_pow_ui(numer.get_mpz_t(), qm1.get_mpz_t(), static_cast<unsigned long>(k));
  const double denom_exp = static_cast<double>(shift) * static_cast<double>(k);
  double acc = 0;
  for (std::uint64_t j = 0; j <= k; ++j) {
    if (j > 0) {
      numer *= static_cast<unsigned long>(k - j + 1);
      mpz_divexact_ui(numer.get_mpz_t(), numer.get_mpz_t(), static_cast<unsigned long>(j));
      mpz_divexact(numer.get_mpz_t(), numer.get_mpz_t(), qm1.get_mpz_t());
    }
    if (j == 0 || numer == 0) continue;
    long e = 0;
    const double mant = mpz_get_d_2exp(&e, numer.get_mpz_t());
    const double prob = std::ldexp(mant, static_cast<int>(static_cast<double>(e) - denom_exp));
    acc += prob * support_weight(j);
  }
  return acc;
}

}  // namespace

double expected_restricted_weight(std::uint64_t k, unsigned level) {
  if (level < 1) throw std::invalid_argument("potential levels start at 1 (restriction rate 2^-(level-1) <= 1)");
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, double> cache;
  const auto key = std::make_pair(k, level);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const double value = compute_expected_weight(k, level);
  std::lock_guard lock(mutex);
  cache.emplace(key, value);
  return value;
}

double potential_exact(const WeightedFormSet& set, unsigned level) {
  double acc = 0;
  for (const auto& f : set.forms) acc += expected_restricted_weight(f.support_size(), level);
  return acc;
}

PotentialEstimate potential_mc(const WeightedFormSet& set, unsigned level, std::uint64_t trials,
                               std::uint64_t seed, double delta) {
  if (level < 1) throw std::invalid_argument("potential levels start at 1");
  if (trials == 0) throw std::invalid_argument("potential_mc: trials must be positive");
  std::vector<std::vector<Var>> supports;
  supports.reserve(set.forms.size());
  std::size_t n = set.n;
  for (const auto& f : set.forms) {
    supports.push_back(f.support());
    n = std::max<std::size_t>(n, f.max_var());
  }
  Rng rng(seed);
  std::vector<std::uint8_t> star(n + 1, 0);
  double sum = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    for (std::size_t v = 1; v <= n; ++v) star[v] = rng.one_in_pow2(level - 1) ? 1 : 0;
    double total = 0;
    for (const auto& s : supports) {
      std::uint64_t alive = 0;
      for (Var v : s) alive += star[v];
      total += support_weight(alive);
    }
    sum += total;
  }
  PotentialEstimate est;
  est.estimate = sum / static_cast<double>(trials);
  est.trials = trials;
  est.seed = seed;
  est.delta = delta;
  const double range = std::max<double>(1.0, static_cast<double>(set.forms.size()));
  est.radius = hoeffding_radius(trials, delta, range);
  return est;
}

double avg_potential(const WeightedFormSet& set, std::size_t n, const Rational& eps) {
  const auto levels = hard_index_set(n, eps);
  double acc = 0;
  for (unsigned l : levels) acc += potential_exact(set, l);
  return acc / static_cast<double>(levels.size());
}

double potential_bound(std::size_t forms, std::size_t index_count) {
  if (index_count == 0) throw std::invalid_argument("potential_bound: empty index set");
  return kPotentialConstant * static_cast<double>(forms) / static_cast<double>(index_count);
}

bool partition_hypothesis(std::span<const LinearForm> forms, std::uint64_t K, std::uint64_t R) {
  if (K == 0 || R == 0) throw std::invalid_argument("partition: K and R must be positive");
  double total = 0;
  for (const auto& f : forms) total += weight(f);
  const double l = std::log2(2.0 * static_cast<double>(R) * static_cast<double>(K));
  return total < static_cast<double>(R) / (l * l);
}

namespace {

std::size_t fresh_count(const LinearForm& form, const std::vector<std::uint8_t>& covered) {
  std::size_t fresh = 0;
  for (const auto& [v, c] : form.coeffs()) {
    if (v >= covered.size() || !covered[v]) ++fresh;
  }
  return fresh;
}

Var max_var(std::span<const LinearForm> forms) {
  Var m = 0;
  for (const auto& f : forms) m = std::max(m, f.max_var());
  return m;
}

}  // namespace

PartitionResult partition(std::span<const LinearForm> forms, std::uint64_t K, std::uint64_t R) {
  if (K == 0 || R == 0) throw std::invalid_argument("partition: K and R must be positive");
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(max_var(forms)) + 1, 0);
  std::vector<std::uint8_t> moved(forms.size(), 0);
  PartitionResult result;
  for (;;) {
    std::size_t pick = forms.size();
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (!moved[i] && fresh_count(forms[i], covered) <= K) {
        pick = i;
        break;
      }
    }
    if (pick == forms.size()) break;
    moved[pick] = 1;
    result.primary.push_back(pick);
    for (const auto& [v, c] : forms[pick].coeffs()) covered[v] = 1;
    ++result.iterations;
  }
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (!moved[i]) result.residual.push_back(i);
  }
  return result;
}

PartitionCheck check_partition(std::span<const LinearForm> forms, const PartitionResult& result,
                               std::uint64_t K, std::uint64_t R) {
  PartitionCheck check;
  std::vector<int> seen(forms.size(), 0);
  bool in_range = true;
  for (auto i : result.primary) {
    if (i < forms.size()) ++seen[i]; else in_range = false;
  }
  for (auto i : result.residual) {
    if (i < forms.size()) ++seen[i]; else in_range = false;
  }
  check.disjoint_cover = in_range;
  for (int s : seen) check.disjoint_cover = check.disjoint_cover && s == 1;

  std::vector<std::uint8_t> covered(static_cast<std::size_t>(max_var(forms)) + 1, 0);
  for (auto i : result.primary) {
    if (i >= forms.size()) continue;
    for (Var v : forms[i].support()) covered[v] = 1;
  }
  check.residuals_ok = in_range;
  for (auto i : result.residual) {
    if (i < forms.size() && fresh_count(forms[i], covered) < K) check.residuals_ok = false;
  }
  check.size_ok = result.primary.size() <= R;
  return check;
}

ThresholdResult threshold_t(std::size_t n, const Rational& eps) {
  if (eps > Rational(1, 8)) throw std::invalid_argument("threshold_t: eps must be at most 1/8");
  ThresholdResult res;
  res.index_count = hard_index_set(n, eps).size();
  res.R = static_cast<std::uint64_t>(floor_log2(1 / (8 * eps)));
  if (res.R == 0) return res;
  const double C = kPotentialConstant;
  const double R = static_cast<double>(res.R);
  const double I = static_cast<double>(res.index_count);
  for (std::uint64_t t = 1;; ++t) {
    const double td = static_cast<double>(t);
    const double l = std::log2(8.0 * R * td * td);
    if (!(2.0 * C * td / I < R / (l * l))) break;
    res.t = t;
  }
  return res;
}

TailReport verify_tail_claims(std::uint64_t k, unsigned level_cap) {
  if (k == 0) throw std::invalid_argument("verify_tail_claims: k must be positive");
  const unsigned lk = static_cast<unsigned>(std::bit_width(k) - 1);  // floor(log2 k)
  if (level_cap == 0) level_cap = lk + 60;
  if (level_cap <= lk) {
    throw std::invalid_argument("verify_tail_claims: level_cap must exceed floor(log2 k) = " + std::to_string(lk));
  }
  TailReport r;
  r.k = k;
  r.level_cap = level_cap;
  for (unsigned l = lk + 1; l <= level_cap; ++l) r.t1 += expected_restricted_weight(k, l);
  // Levels beyond the cap: E[w] <= Pr[some variable survives] <= k / 2^(l-1).
  r.t1 += std::ldexp(static_cast<double>(k), -static_cast<int>(level_cap) + 1);
  for (unsigned l = 1; l <= lk; ++l) r.t2 += expected_restricted_weight(k, l);

  const double e = std::numbers::e;
  r.t2_bound = std::numbers::pi * std::numbers::pi / 6.0 + e / (e - 1.0);
  const double logk = std::log2(static_cast<double>(k));
  for (unsigned l = 1; l <= lk; ++l) {
    const double h = logk - static_cast<double>(l) + 1.0;
    r.t2_reference += 1.0 / (h * h) + std::exp(-static_cast<double>(k) / std::ldexp(4.0, static_cast<int>(l) - 1));
  }
  r.t1_ok = r.t1 <= r.t1_bound * (1.0 + kRelTol);
  r.t2_ok = r.t2 <= r.t2_bound * (1.0 + kRelTol);
  return r;
}

}  // namespace orpoly
