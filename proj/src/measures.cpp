#include "orpoly/measures.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace orpoly {

namespace {

void require_probability(const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("probability outside [0, 1]: " + to_string(p));
}

std::size_t hamming_weight(std::span<const std::uint8_t> x) {
  std::size_t w = 0;
  for (auto b : x) w += b ? 1 : 0;
  return w;
}

}  // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::mu: return "mu";
    case MeasureKind::rho: return "rho";
    case MeasureKind::hard: return "hard";
  }
  return "?";
}

MeasureKind parse_measure_kind(std::string_view name) {
  if (name == "mu") return MeasureKind::mu;
  if (name == "rho") return MeasureKind::rho;
  if (name == "hard") return MeasureKind::hard;
  throw std::invalid_argument("unknown measure '" + std::string(name) + "' (expected mu|rho|hard)");
}

MeasureSpec MeasureSpec::mu(std::size_t n, Rational p) {
  require_probability(p);
  return {MeasureKind::mu, n, std::move(p), 0};
}

MeasureSpec MeasureSpec::rho(std::size_t n, Rational p) {
  require_probability(p);
  return {MeasureKind::rho, n, std::move(p), 0};
}

MeasureSpec MeasureSpec::hard(std::size_t n, Rational eps) {
  require_hard_eps(n, eps);
  return {MeasureKind::hard, n, 0, std::move(eps)};
}

Rational MeasureSpec::point_mass(std::size_t weight) const {
  switch (kind) {
    case MeasureKind::mu: return mu_point_mass(p, n, weight);
    case MeasureKind::hard: return hard_point_mass(n, eps, weight);
    case MeasureKind::rho: break;
  }
  throw std::invalid_argument("rho is a distribution over restrictions, not over points of the cube");
}

void require_hard_eps(std::size_t n, const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 2)) {
    throw std::invalid_argument("hard distribution needs eps in [2^(-n/2), 1/2), got " + to_string(eps));
  }
  // eps >= 2^(-n/2)  <=>  log2(1/eps) <= n/2
  Rational half_n(BigInt(static_cast<unsigned long>(n)), BigInt(2));
  half_n.canonicalize();
  if (!log2_at_most(1 / eps, half_n)) {
    throw std::invalid_argument("eps " + to_string(eps) + " is below 2^(-n/2) for n = " + std::to_string(n));
  }
}

std::vector<unsigned> hard_index_set(std::size_t n, const Rational& eps) {
  require_hard_eps(n, eps);
  // l <= log2 n - log2 log2(1/eps)  <=>  log2(1/eps) <= n / 2^l
  const Rational inv = 1 / eps;
  const Rational nn(BigInt(static_cast<unsigned long>(n)));
  std::vector<unsigned> out;
  for (unsigned l = 1; log2_at_most(inv, nn * pow2(-static_cast<long>(l))); ++l) out.push_back(l);
  if (out.empty()) {
    throw std::invalid_argument("hard index set is empty for n = " + std::to_string(n) + ", eps = " +
                                to_string(eps));
  }
  return out;
}

Rational mu_point_mass(const Rational& p, std::size_t n, std::size_t weight) {
  require_probability(p);
  if (weight > n) throw std::invalid_argument("weight exceeds n");
  return pow(p, weight) * pow(Rational(1) - p, n - weight);
}

Rational mu_mass(const Rational& p, std::span<const std::uint8_t> x) {
  return mu_point_mass(p, x.size(), hamming_weight(x));
}

Rational hard_point_mass(std::size_t n, const Rational& eps, std::size_t weight) {
  const auto levels = hard_index_set(n, eps);
  Rational acc = 0;
  for (unsigned l : levels) acc += mu_point_mass(pow2(-static_cast<long>(l)), n, weight);
  return acc / static_cast<unsigned long>(levels.size());
}

Rational hard_mass(std::size_t n, const Rational& eps, std::span<const std::uint8_t> x) {
  if (x.size() != n) throw std::invalid_argument("dimension mismatch");
  return hard_point_mass(n, eps, hamming_weight(x));
}

Point sample_mu(const Rational& p, std::size_t n, Rng& rng) {
  require_probability(p);
  Point x(n);
  for (auto& b : x) b = rng.bernoulli(p) ? 1 : 0;
  return x;
}

Restriction sample_rho(const Rational& p, std::size_t n, Rng& rng) {
  require_probability(p);
  std::vector<Assign> values(n);
  for (auto& v : values) v = rng.bernoulli(p) ? Assign::star : Assign::zero;
  return Restriction(std::move(values));
}

Point sample_hard(std::size_t n, const Rational& eps, Rng& rng) {
  const auto levels = hard_index_set(n, eps);
  const unsigned l = levels[rng.below(levels.size())];
  Point x(n);
  for (auto& b : x) b = rng.one_in_pow2(l) ? 1 : 0;
  return x;
}

Point sample_mu(const Rational& p, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_mu(p, n, rng);
}

Restriction sample_rho(const Rational& p, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_rho(p, n, rng);
}

Point sample_hard(std::size_t n, const Rational& eps, std::uint64_t seed) {
  Rng rng(seed);
  return sample_hard(n, eps, rng);
}

std::vector<Rational> composed_restriction_law(const Rational& p, std::size_t n) {
  if (p < 0 || p > Rational(1, 2)) throw std::invalid_argument("composed law needs p in [0, 1/2]");
  if (n > 16) throw std::invalid_argument("composed law enumeration limited to n <= 16");
  const Rational star = 2 * p;
  const Rational fixed = 1 - star;
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<Rational> law(total, Rational(0));
  // Restriction: mask of star positions, probability star^|S| fixed^(n-|S|).
  // Filling: each subset of the stars with probability 2^-|S|.
  for (std::uint64_t stars = 0; stars < total; ++stars) {
    const auto s = static_cast<std::size_t>(std::popcount(stars));
    const Rational rho_prob = pow(star, s) * pow(fixed, n - s);
    if (rho_prob == 0) continue;
    const Rational each = rho_prob * pow2(-static_cast<long>(s));
    for (std::uint64_t ones = stars;; ones = (ones - 1) & stars) {
      law[ones] += each;
      if (ones == 0) break;
    }
  }
  return law;
}

}  // namespace orpoly
