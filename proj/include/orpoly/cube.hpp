#pragma once

#include "orpoly/algebra.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orpoly {

/// Exact, allocation-free testing of "L_i(x) = 1 for some i" over a fixed list
/// of affine forms. Each form is rescaled by the lcm of its denominators, so
/// the event becomes an integer equality  sum_j c_j x_j == target. Sums are
/// held in 64-bit integers when every partial sum provably fits, otherwise in
/// arbitrary-precision integers.
///
/// For a hyperplane covering polynomial P, P(x) = 1 exactly when some form
/// hits 1 (the reals have no zero divisors), so this decides agreement with
/// OR without evaluating the product.
class HitScanner {
 public:
  HitScanner(std::size_t n, std::span<const LinearForm> forms);

  std::size_t n() const { return n_; }
  std::size_t form_count() const { return target_big_.size(); }

  bool any_hit(std::span<const std::uint8_t> x) const;

  /// Calls visit(mask, weight, any_hit) for every x in {0,1}^n, in Gray-code
  /// order. Bit i of mask is variable i + 1. Requires n <= 40.
  template <class Visit>
  void scan(Visit&& visit) const {
    if (n_ > 40) throw std::invalid_argument("HitScanner::scan: n too large for exhaustive enumeration");
    if (small_) {
      scan_impl(visit, cols_small_, target_small_);
    } else {
      scan_impl(visit, cols_big_, target_big_);
    }
  }

 private:
  template <class Int>
  using Columns = std::vector<std::vector<std::pair<std::uint32_t, Int>>>;

  template <class Visit, class Int>
  void scan_impl(Visit& visit, const Columns<Int>& cols, const std::vector<Int>& target) const {
    const std::size_t m = target.size();
    std::vector<Int> sums(m, Int(0));
    std::size_t hits = 0;
    for (std::size_t f = 0; f < m; ++f) {
      if (sums[f] == target[f]) ++hits;
    }
    std::uint64_t mask = 0;
    unsigned weight = 0;
    visit(mask, weight, hits > 0);
    const std::uint64_t total = std::uint64_t{1} << n_;
    for (std::uint64_t i = 1; i < total; ++i) {
      const int bit = std::countr_zero(i);
      const std::uint64_t flag = std::uint64_t{1} << bit;
      mask ^= flag;
      const bool set = (mask & flag) != 0;
      weight = set ? weight + 1 : weight - 1;
      for (const auto& [f, c] : cols[static_cast<std::size_t>(bit)]) {
        if (sums[f] == target[f]) --hits;
        if (set) {
          sums[f] += c;
        } else {
          sums[f] -= c;
        }
        if (sums[f] == target[f]) ++hits;
      }
      visit(mask, weight, hits > 0);
    }
  }

  std::size_t n_;
  bool small_ = true;
  Columns<std::int64_t> cols_small_;
  std::vector<std::int64_t> target_small_;
  Columns<BigInt> cols_big_;
  std::vector<BigInt> target_big_;
};

}  // namespace orpoly
