#include <doctest.h>

#include "orpoly/analysis.hpp"
#include "orpoly/lowerbound.hpp"
#include "orpoly/measures.hpp"
#include "support.hpp"

#include <cmath>
#include <numbers>
#include <set>

using namespace orpoly;
using orpoly::testing::random_subset_form;
constexpr auto q = orpoly::testing::ratio;

namespace {

double w_oracle(std::uint64_t k) {
  if (k == 0) return 0;
  const double l = std::log2(2.0 * static_cast<double>(k));
  return 1 / (l * l);
}

// E[w] under rho_p for a k-variable form by summing over all 2^k survivor sets.
double expected_weight_oracle(unsigned k, unsigned level) {
  const double p = std::ldexp(1.0, 1 - static_cast<int>(level));
  double total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    const auto j = static_cast<unsigned>(std::popcount(mask));
    total += std::pow(p, j) * std::pow(1 - p, k - j) * w_oracle(j);
  }
  return total;
}

std::set<Var> fresh_vars(const LinearForm& f, const std::set<Var>& used) {
  std::set<Var> out;
  for (Var v : f.support()) {
    if (!used.count(v)) out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("support weights") {
  CHECK(support_weight(0) == 0);
  CHECK(support_weight(1) == 1);
  CHECK(support_weight(2) == doctest::Approx(0.25));
  CHECK(weight(LinearForm()) == 0);
  for (std::uint64_t k = 1; k < 300; ++k) CHECK(support_weight(k) == doctest::Approx(w_oracle(k)));
}

TEST_CASE("exact potential") {
  std::vector<Var> v12{1, 2};
  WeightedFormSet two{2, {LinearForm::sum_of(v12)}};
  CHECK(potential_exact(two, 1) == doctest::Approx(0.25));
  CHECK(potential_exact(two, 2) == doctest::Approx(9.0 / 16));
  WeightedFormSet zero{3, {LinearForm()}};
  for (unsigned l = 1; l <= 6; ++l) CHECK(potential_exact(zero, l) == 0);
  for (unsigned k = 1; k <= 14; ++k) {
    for (unsigned l = 1; l <= 8; ++l) {
      CHECK(expected_restricted_weight(k, l) == doctest::Approx(expected_weight_oracle(k, l)).epsilon(1e-12));
    }
  }
  // Huge supports stay finite and close to w(k p).
  const double big = expected_restricted_weight(1'000'000, 3);
  CHECK(std::isfinite(big));
  CHECK(big == doctest::Approx(w_oracle(250'000)).epsilon(1e-3));
  // Both pmf routes agree around the switch-over.
  const double below = expected_restricted_weight(4096, 4);
  const double above = expected_restricted_weight(4097, 4);
  CHECK(above == doctest::Approx(below).epsilon(1e-3));
  CHECK(above < below);
  CHECK_THROWS_AS(expected_restricted_weight(4, 0), std::invalid_argument);
}

TEST_CASE("Monte Carlo potential") {
  Rng rng(8);
  WeightedFormSet set{40, {}};
  for (int i = 0; i < 5; ++i) set.forms.push_back(random_subset_form(rng, 40, 1 + rng.below(40)));
  auto level1 = potential_mc(set, 1, 50, 3);
  CHECK(level1.estimate == doctest::Approx(set.total_weight()));
  for (unsigned l = 2; l <= 5; ++l) {
    auto est = potential_mc(set, l, 4000, 3);
    CHECK(est.radius == doctest::Approx(hoeffding_radius(4000, 0.05, 5)));
    CHECK(std::abs(est.estimate - potential_exact(set, l)) <= 3 * est.radius);
  }
  CHECK(potential_mc(set, 3, 100, 9).estimate == potential_mc(set, 3, 100, 9).estimate);
}

TEST_CASE("average potential") {
  std::vector<Var> v{1, 2, 3};
  WeightedFormSet one{16, {LinearForm::sum_of(v)}};
  // I = {1}: only level 1, where nothing is restricted away.
  CHECK(avg_potential(one, 16, q(1, 256)) == doctest::Approx(one.total_weight()));
  WeightedFormSet twice{16, {one.forms[0], one.forms[0]}};
  CHECK(avg_potential(twice, 16, q(1, 16)) == doctest::Approx(2 * avg_potential(one, 16, q(1, 16))));
  CHECK(potential_bound(10, 4) == doctest::Approx(kPotentialConstant * 2.5));
  CHECK(kPotentialConstant == doctest::Approx(4 + std::numbers::pi * std::numbers::pi / 6));
}

TEST_CASE("partition example") {
  std::vector<LinearForm> forms;
  std::vector<Var> one{1};
  forms.push_back(LinearForm::sum_of(one));
  std::vector<Var> ten;
  for (Var v = 2; v <= 11; ++v) ten.push_back(v);
  forms.push_back(LinearForm::sum_of(ten));
  auto r = partition(forms, 3, 2);
  CHECK(r.primary == std::vector<std::size_t>{0});
  CHECK(r.residual == std::vector<std::size_t>{1});
  auto c = check_partition(forms, r, 3, 2);
  CHECK(c.disjoint_cover);
  CHECK(c.residuals_ok);
  CHECK(c.size_ok);

  auto empty = partition(std::span<const LinearForm>{}, 3, 2);
  CHECK(empty.primary.empty());
  CHECK(empty.residual.empty());
  CHECK(empty.iterations == 0);
}

TEST_CASE("partition postconditions against an independent replay") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t K = 1 + rng.below(6);
    const std::size_t n = 60;
    std::vector<LinearForm> forms;
    const auto t = 1 + rng.below(12);
    for (std::uint64_t i = 0; i < t; ++i) forms.push_back(random_subset_form(rng, n, 1 + rng.below(n)));
    auto r = partition(forms, K, 100);

    // Replay the greedy loop with sets.
    std::set<Var> used;
    std::vector<bool> moved(forms.size(), false);
    std::vector<std::size_t> order;
    for (bool again = true; again;) {
      again = false;
      for (std::size_t i = 0; i < forms.size(); ++i) {
        if (!moved[i] && fresh_vars(forms[i], used).size() <= K) {
          moved[i] = true;
          order.push_back(i);
          for (Var v : forms[i].support()) used.insert(v);
          again = true;
          break;
        }
      }
    }
    CHECK(r.primary == order);
    for (std::size_t i : r.residual) CHECK(fresh_vars(forms[i], used).size() > K);
    CHECK(r.primary.size() + r.residual.size() == forms.size());
    auto c = check_partition(forms, r, K, 100);
    CHECK(c.disjoint_cover);
    CHECK(c.residuals_ok);
  }
}

TEST_CASE("partition hypothesis") {
  std::vector<Var> big;
  for (Var v = 1; v <= 1000; ++v) big.push_back(v);
  std::vector<LinearForm> forms{LinearForm::sum_of(big)};
  // w = 1/log2^2(2000) ~ 0.0083; R / log2^2(2 R K) with R = 1, K = 1 is 1.
  CHECK(partition_hypothesis(forms, 1, 1));
  std::vector<Var> single{1};
  std::vector<LinearForm> light{LinearForm::sum_of(single)};
  CHECK_FALSE(partition_hypothesis(light, 1, 1));
}

TEST_CASE("threshold scan") {
  auto r = threshold_t(1U << 20, pow2(-10));
  CHECK(r.R == 7);
  CHECK(r.index_count == 16);
  // Scan oracle: largest t with 2 C t / |I| < R / log2^2(8 R t^2), t = 0 always allowed.
  std::uint64_t oracle = 0;
  for (std::uint64_t t = 1; t < 10000; ++t) {
    const double lhs = 2 * kPotentialConstant * static_cast<double>(t) / 16;
    const double l = std::log2(8.0 * 7 * static_cast<double>(t * t));
    if (lhs < 7 / (l * l)) oracle = t;
  }
  CHECK(r.t == oracle);

  // Nondecreasing in n.
  std::uint64_t prev = 0;
  for (unsigned e = 20; e <= 60; e += 4) {
    auto tr = threshold_t(std::size_t{1} << e, pow2(-10));
    CHECK(tr.t >= prev);
    prev = tr.t;
  }
  // 1/16 < eps <= 1/8 gives R = 0 and t = 0.
  CHECK(threshold_t(1024, q(1, 8)).R == 0);
  CHECK(threshold_t(1024, q(1, 8)).t == 0);
  CHECK_THROWS_AS(threshold_t(1024, q(1, 4)), std::invalid_argument);
}

TEST_CASE("tail claims") {
  auto k1 = verify_tail_claims(1);
  CHECK(k1.t2 == 0);
  CHECK(k1.t1 <= 2.0);
  CHECK(k1.pass());
  for (unsigned j = 0; j <= 10; ++j) {
    auto r = verify_tail_claims(std::uint64_t{1} << j);
    CHECK(r.pass());
    CHECK(r.t2_bound == doctest::Approx(std::numbers::pi * std::numbers::pi / 6 + std::numbers::e / (std::numbers::e - 1)));
    // T2 by the per-level oracle for small k.
    if (j <= 4) {
      double t2 = 0;
      for (unsigned l = 1; l <= j; ++l) t2 += expected_weight_oracle(1U << j, l);
      CHECK(r.t2 == doctest::Approx(t2).epsilon(1e-10));
    }
  }
  CHECK(verify_tail_claims(1000).pass());
}
