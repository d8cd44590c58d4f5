#include "orpoly/cube.hpp"

#include <cstdlib>

namespace orpoly {

HitScanner::HitScanner(std::size_t n, std::span<const LinearForm> forms)
    : n_(n), cols_small_(n), cols_big_(n) {
  // Bound every reachable partial sum by sum_j |c_j| + |target| < 2^62.
  BigInt limit = 1;
  mpz_mul_2exp(limit.get_mpz_t(), limit.get_mpz_t(), 62);

  target_big_.reserve(forms.size());
  for (std::size_t f = 0; f < forms.size(); ++f) {
    const auto& form = forms[f];
    if (form.max_var() > n) throw std::invalid_argument("HitScanner: form uses a variable beyond n");
    BigInt scale = form.constant().get_den();
    for (const auto& [v, c] : form.coeffs()) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    }
    // L(x) = 1  <=>  sum_j (c_j * scale) x_j == (1 - constant) * scale
    Rational tgt = (1 - form.constant()) * scale;
    BigInt target = tgt.get_num();
    BigInt reach = abs(target);
    for (const auto& [v, c] : form.coeffs()) {
      Rational scaled = c * scale;
      BigInt ci = scaled.get_num();
      reach += abs(ci);
      cols_big_[v - 1].emplace_back(static_cast<std::uint32_t>(f), ci);
    }
    if (reach >= limit) small_ = false;
    target_big_.push_back(std::move(target));
  }
  if (small_) {
    target_small_.reserve(target_big_.size());
    for (const auto& t : target_big_) target_small_.push_back(t.get_si());
    for (std::size_t v = 0; v < n; ++v) {
      for (const auto& [f, c] : cols_big_[v]) cols_small_[v].emplace_back(f, c.get_si());
    }
    cols_big_.clear();
  }
}

bool HitScanner::any_hit(std::span<const std::uint8_t> x) const {
  if (x.size() != n_) throw std::invalid_argument("HitScanner: dimension mismatch");
  if (small_) {
    std::vector<std::int64_t> sums(target_small_.size(), 0);
    for (std::size_t v = 0; v < n_; ++v) {
      if (!x[v]) continue;
      for (const auto& [f, c] : cols_small_[v]) sums[f] += c;
    }
    for (std::size_t f = 0; f < sums.size(); ++f) {
      if (sums[f] == target_small_[f]) return true;
    }
    return false;
  }
  std::vector<BigInt> sums(target_big_.size(), BigInt(0));
  for (std::size_t v = 0; v < n_; ++v) {
    if (!x[v]) continue;
    for (const auto& [f, c] : cols_big_[v]) sums[f] += c;
  }
  for (std::size_t f = 0; f < sums.size(); ++f) {
    if (sums[f] == target_big_[f]) return true;
  }
  return false;
}

}  // namespace orpoly
