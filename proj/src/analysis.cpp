#include "orpoly/analysis.hpp"

#include "orpoly/cube.hpp"
#include "orpoly/parallel.hpp"
#include "orpoly/random.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace orpoly {

std::vector<std::uint64_t> disagreements_by_weight(const HypCoverPoly& poly, std::size_t limit) {
  if (poly.n() > limit) {
    throw std::invalid_argument("n = " + std::to_string(poly.n()) + " exceeds the exhaustive limit " +
                                std::to_string(limit));
  }
  std::vector<std::uint64_t> counts(poly.n() + 1, 0);
  HitScanner scanner(poly.n(), poly.forms());
  // P(x) = 1 iff some form hits 1; OR(x) = 1 iff x != 0. At the origin every
  // homogeneous form is 0, so P(0) = 0 = OR(0) and no special case is needed.
  scanner.scan([&](std::uint64_t, unsigned weight, bool hit) {
    if (hit != (weight > 0)) ++counts[weight];
  });
  return counts;
}

Rational exact_error(const HypCoverPoly& poly, const MeasureSpec& spec, std::size_t limit) {
  if (spec.n != poly.n()) {
    throw std::invalid_argument("measure is over n = " + std::to_string(spec.n) + " but polynomial has n = " +
                                std::to_string(poly.n()));
  }
  if (spec.kind == MeasureKind::rho) {
    throw std::invalid_argument("exact_error needs a measure on points (mu or hard)");
  }
  const auto counts = disagreements_by_weight(poly, limit);
  Rational err = 0;
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (counts[w] == 0) continue;
    err += spec.point_mass(w) * Rational(BigInt(static_cast<unsigned long>(counts[w])));
  }
  return err;
}

double hoeffding_radius(std::uint64_t trials, double delta, double range) {
  if (trials == 0) throw std::invalid_argument("hoeffding_radius: trials must be positive");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("hoeffding_radius: delta must lie in (0, 1)");
  return range * std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(trials)));
}

bool ErrorReport::consistent() const {
  if (!exact_error) return true;
  const double e = to_double(*exact_error);
  return std::fabs(e - mc_estimate) <= confidence_radius;
}

ErrorReport pointwise_error_mc(const PolySampler& sampler, std::span<const std::uint8_t> x,
                               std::uint64_t trials, double delta, std::uint64_t seed, unsigned jobs) {
  if (trials == 0) throw std::invalid_argument("pointwise_error_mc: trials must be positive");
  const bool target = or_value(x);
  const Point point(x.begin(), x.end());
  auto partial = parallel_chunks<std::uint64_t>(trials, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t failures = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const HypCoverPoly poly = sampler(derive_seed(seed, i));
      if (poly.n() != point.size()) throw std::invalid_argument("sampler produced a polynomial of the wrong n");
      HitScanner scanner(poly.n(), poly.forms());
      if (scanner.any_hit(point) != target) ++failures;
    }
    return failures;
  });
  ErrorReport report;
  for (auto f : partial) report.failures += f;
  report.trials = trials;
  report.delta = delta;
  report.seed = seed;
  report.mc_estimate = static_cast<double>(report.failures) / static_cast<double>(trials);
  report.confidence_radius = hoeffding_radius(trials, delta);
  return report;
}

BigInt binom_le(std::uint64_t n, std::uint64_t k) {
  BigInt term = 1;
  BigInt sum = 1;
  const std::uint64_t top = std::min(n, k);
  for (std::uint64_t i = 1; i <= top; ++i) {
    term *= static_cast<unsigned long>(n - i + 1);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(i));
    sum += term;
  }
  return sum;
}

double degree_target(std::uint64_t n, const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 2)) throw std::invalid_argument("degree_target: eps must lie in (0, 1/2)");
  const auto k = static_cast<std::uint64_t>(floor_log2(1 / eps));
  return log2(binom_le(n, k));
}

BinomBoundsReport check_binom_bounds(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || 2 * k > n) {
    throw std::invalid_argument("check_binom_bounds: need 1 <= k <= n/2 (n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
  }
  BinomBoundsReport r;
  r.n = n;
  r.k = k;
  r.value = binom_le(n, k);
  const auto nk = static_cast<unsigned long>(k);
  BigInt n_pow;
  BigInt k_pow;
  mpz_ui_pow_ui(n_pow.get_mpz_t(), static_cast<unsigned long>(n), nk);
  mpz_ui_pow_ui(k_pow.get_mpz_t(), nk, nk);
  // (n/k)^k <= B  <=>  n^k <= B k^k
  r.lower_ok = n_pow <= r.value * k_pow;
  // B <= (e n/k)^k  is implied by  B k^k <= e_lo^k n^k  with e_lo < e.
  const Rational e_lo(BigInt(271828182845UL), BigInt(100000000000UL));
  r.upper_ok = Rational(r.value * k_pow) <= pow(e_lo, nk) * Rational(n_pow);
  const double ratio = static_cast<double>(n) / static_cast<double>(k);
  r.lower = std::pow(ratio, static_cast<double>(k));
  r.upper = std::pow(std::exp(1.0) * ratio, static_cast<double>(k));
  return r;
}

}  // namespace orpoly
