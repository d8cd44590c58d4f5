#include "orpoly/constructions.hpp"

#include "orpoly/random.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace orpoly {

namespace {

void require_eps_open_half(const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 2)) {
    throw std::invalid_argument("eps must lie in (0, 1/2), got " + to_string(eps));
  }
}

std::vector<Var> all_vars(std::size_t n) {
  std::vector<Var> vars(n);
  for (std::size_t i = 0; i < n; ++i) vars[i] = static_cast<Var>(i + 1);
  return vars;
}

}  // namespace

HypCoverPoly exact_or_poly(std::size_t n) {
  if (n == 0) throw std::invalid_argument("exact_or_poly: n must be positive");
  return slice_cover_poly(n, n);
}

HypCoverPoly slice_cover_poly(std::size_t n, std::size_t slices) {
  if (slices > n) throw std::invalid_argument("slice_cover_poly: more slices than variables");
  const auto vars = all_vars(n);
  std::vector<LinearForm> forms;
  forms.reserve(slices);
  for (std::size_t i = 1; i <= slices; ++i) {
    forms.push_back(LinearForm::sum_of(vars, Rational(1, static_cast<unsigned long>(i))));
  }
  return HypCoverPoly(n, std::move(forms));
}

Rational epoch_hit_prob(std::uint64_t m, unsigned epoch) {
  if (m == 0) throw std::invalid_argument("epoch_hit_prob: weight must be positive");
  const Rational rate = pow2(-static_cast<long>(epoch));
  // (1 - rate)^(m-1); for epoch 0 this is 0^(m-1) with 0^0 = 1.
  const Rational miss = pow(Rational(1) - rate, m - 1);
  Rational q = Rational(BigInt(static_cast<unsigned long>(m))) * rate * miss;
  q.canonicalize();
  return q;
}

unsigned epoch_form_count(const Rational& eps) {
  if (eps <= 0 || eps > Rational(1, 2)) {
    throw std::invalid_argument("epoch_form_count: eps must lie in (0, 1/2], got " + to_string(eps));
  }
  unsigned t = 1;
  Rational miss(3, 4);
  while (miss > eps) {
    miss *= Rational(3, 4);
    ++t;
  }
  return t;
}

unsigned top_epoch(std::size_t n) {
  if (n < 2) throw std::invalid_argument("epochs need n >= 2");
  // n = 2: epoch 0 cannot hit weight 2 (L = x1 + x2 evaluates to 2).
  if (n == 2) return 1;
  return static_cast<unsigned>(ceil_log2(Rational(BigInt(static_cast<unsigned long>(n))))) - 1;
}

unsigned epoch_for_weight(std::uint64_t m, unsigned lo, unsigned hi) {
  if (m == 0) throw std::invalid_argument("epoch_for_weight: weight must be positive");
  const unsigned natural = static_cast<unsigned>(std::bit_width(m) - 1);
  return std::clamp(natural, lo, hi);
}

unsigned inv_log2_floor(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must lie in (0, 1)");
  return static_cast<unsigned>(floor_log2(1 / eps));
}

unsigned inv_loglog2_ceil(const Rational& eps) {
  require_eps_open_half(eps);
  const Rational inv = 1 / eps;
  unsigned j = 0;
  while (!log2_at_most(inv, pow2(static_cast<long>(j)))) ++j;
  return j;
}

HypCoverPoly sample_epoch_poly(std::size_t n, unsigned epoch, const Rational& eps, std::uint64_t seed) {
  if (n < 2 || epoch > top_epoch(n)) {
    throw std::invalid_argument("sample_epoch_poly: epoch " + std::to_string(epoch) + " out of range for n = " +
                                std::to_string(n));
  }
  const unsigned t = epoch_form_count(eps);
  Rng rng(seed);
  std::vector<LinearForm> forms;
  forms.reserve(t);
  std::vector<Var> subset;
  for (unsigned f = 0; f < t; ++f) {
    do {
      subset.clear();
      for (std::size_t i = 1; i <= n; ++i) {
        if (rng.one_in_pow2(epoch)) subset.push_back(static_cast<Var>(i));
      }
    } while (subset.empty());
    forms.push_back(LinearForm::sum_of(subset));
  }
  return HypCoverPoly(n, std::move(forms));
}

HypCoverPoly sample_brs_tarui(std::size_t n, const Rational& eps, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_brs_tarui: n must be at least 2");
  require_eps_open_half(eps);
  std::vector<HypCoverPoly> parts;
  for (unsigned l = 0; l <= top_epoch(n); ++l) {
    parts.push_back(sample_epoch_poly(n, l, eps, derive_seed(seed, l)));
  }
  return compose_or(parts, n);
}

std::size_t brs_tarui_degree(std::size_t n, const Rational& eps) {
  require_eps_open_half(eps);
  return static_cast<std::size_t>(top_epoch(n) + 1) * epoch_form_count(eps);
}

ImprovedPlan improved_plan(std::size_t n, const Rational& eps) {
  if (n < 2) throw std::invalid_argument("sample_improved: n must be at least 2");
  require_eps_open_half(eps);
  // eps >= 2^(-n/2)  <=>  log2(1/eps) <= n/2
  Rational half_n(BigInt(static_cast<unsigned long>(n)), BigInt(2));
  half_n.canonicalize();
  if (!log2_at_most(1 / eps, half_n)) {
    throw std::invalid_argument("sample_improved: eps " + to_string(eps) + " is below 2^(-n/2) for n = " +
                                std::to_string(n));
  }
  ImprovedPlan plan;
  plan.n = n;
  plan.slices = inv_log2_floor(eps);
  plan.first_epoch = inv_loglog2_ceil(eps);
  plan.last_epoch = top_epoch(n);
  plan.forms_per_epoch = epoch_form_count(eps);
  return plan;
}

HypCoverPoly sample_improved(std::size_t n, const Rational& eps, std::uint64_t seed) {
  const ImprovedPlan plan = improved_plan(n, eps);
  std::vector<HypCoverPoly> parts;
  for (unsigned l = plan.first_epoch; l <= plan.last_epoch && plan.epoch_count() > 0; ++l) {
    parts.push_back(sample_epoch_poly(n, l, eps, derive_seed(seed, l)));
  }
  const HypCoverPoly high = compose_or(parts, n);
  const HypCoverPoly low = slice_cover_poly(n, plan.slices);
  const HypCoverPoly both[] = {high, low};
  return compose_or(both, n);
}

}  // namespace orpoly
