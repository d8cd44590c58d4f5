#include "orpoly/oracles.hpp"

#include "orpoly/cube.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace orpoly {

OracleVerdict alon_furedi_check(std::span<const LinearForm> factors, std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the exhaustive limit " +
                                std::to_string(limit));
  }
  // Q(x) != 0  <=>  no factor (1 - L_i) vanishes  <=>  no L_i(x) = 1.
  HitScanner scanner(n, factors);
  std::uint64_t nonzero = 0;
  scanner.scan([&](std::uint64_t, unsigned, bool hit) {
    if (!hit) ++nonzero;
  });
  if (nonzero == 0) throw std::domain_error("Q vanishes on the whole cube; the nonvanishing bound does not apply");
  const auto d = static_cast<long>(factors.size());
  OracleVerdict v;
  v.points = std::uint64_t{1} << n;
  v.measured = Rational(BigInt(static_cast<unsigned long>(nonzero)), BigInt(static_cast<unsigned long>(v.points)));
  v.measured.canonicalize();
  const Rational bound = pow2(-d);
  v.bound = std::ldexp(1.0, -static_cast<int>(d));
  v.pass = v.measured >= bound;
  v.tight = v.measured == bound;
  return v;
}

namespace {

template <class Int, class Counts>
std::uint64_t max_level_count(const std::vector<Int>& coeffs, Counts& counts) {
  const std::size_t k = coeffs.size();
  Int value = 0;
  ++counts[value];
  std::uint64_t mask = 0;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int bit = std::countr_zero(i);
    const std::uint64_t flag = std::uint64_t{1} << bit;
    mask ^= flag;
    if (mask & flag) {
      value += coeffs[static_cast<std::size_t>(bit)];
    } else {
      value -= coeffs[static_cast<std::size_t>(bit)];
    }
    ++counts[value];
  }
  std::uint64_t best = 0;
  for (const auto& [val, c] : counts) best = std::max<std::uint64_t>(best, c);
  return best;
}

}  // namespace

OracleVerdict littlewood_offord_check(const LinearForm& form, std::size_t limit) {
  const std::size_t k = form.support_size();
  if (k == 0) throw std::invalid_argument("littlewood_offord_check: form has empty support");
  if (k > limit) {
    throw std::invalid_argument("support size " + std::to_string(k) + " exceeds the exhaustive limit " +
                                std::to_string(limit));
  }
  // Variables outside the support do not move L, and the constant term only
  // shifts every level set, so enumerating the support suffices.
  BigInt scale = 1;
  for (const auto& [v, c] : form.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> big;
  BigInt reach = 0;
  for (const auto& [v, c] : form.coeffs()) {
    Rational s = c * scale;
    big.push_back(s.get_num());
    reach += abs(big.back());
  }
  BigInt limit62 = 1;
  mpz_mul_2exp(limit62.get_mpz_t(), limit62.get_mpz_t(), 62);

  std::uint64_t best = 0;
  if (reach < limit62) {
    std::vector<std::int64_t> small;
    for (const auto& b : big) small.push_back(b.get_si());
    std::unordered_map<std::int64_t, std::uint64_t> counts;
    counts.reserve(std::size_t{1} << std::min<std::size_t>(k, 20));
    best = max_level_count(small, counts);
  } else {
    std::map<BigInt, std::uint64_t> counts;
    best = max_level_count(big, counts);
  }
  OracleVerdict v;
  v.points = std::uint64_t{1} << k;
  v.measured = Rational(BigInt(static_cast<unsigned long>(best)), BigInt(static_cast<unsigned long>(v.points)));
  v.measured.canonicalize();
  v.bound = 1.0 / std::sqrt(static_cast<double>(k));
  const Rational sq_k = v.measured * v.measured * static_cast<unsigned long>(k);
  v.pass = sq_k <= 1;
  v.tight = sq_k == 1;
  return v;
}

}  // namespace orpoly
