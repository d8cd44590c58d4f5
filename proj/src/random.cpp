#include "orpoly/random.hpp"

#include <limits>
#include <stdexcept>

namespace orpoly {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: empty range");
  // Rejection sampling on the largest multiple of bound.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r = next();
  while (r >= limit) r = next();
  return r % bound;
}

bool Rng::one_in_pow2(unsigned k) {
  while (k >= 64) {
    if (next() != 0) return false;
    k -= 64;
  }
  if (k == 0) return true;
  return (next() & ((std::uint64_t{1} << k) - 1)) == 0;
}

bool Rng::bernoulli(const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("Rng::bernoulli: p outside [0,1]");
  if (p == 0) return false;
  if (p == 1) return true;
  if (!p.get_den().fits_ulong_p()) {
    throw std::invalid_argument("Rng::bernoulli: denominator exceeds 64 bits");
  }
  const std::uint64_t den = p.get_den().get_ui();
  const std::uint64_t num = p.get_num().get_ui();
  return below(den) < num;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

}  // namespace orpoly
