#pragma once

#include "orpoly/algebra.hpp"
#include "orpoly/analysis.hpp"

#include <span>

namespace orpoly {

/// Result of an exhaustive anti-concentration or nonvanishing check.
/// `measured` is exact; `bound` is for display only, since every comparison
/// is carried out in exact arithmetic.
struct OracleVerdict {
  Rational measured;
  double bound = 0;
  bool tight = false;  ///< measured equals the bound exactly
  bool pass = false;
  std::uint64_t points = 0;  ///< number of enumerated assignments
};

/// Q = prod_i (1 - L_i) over affine forms in n variables. Measures
/// Pr_{x uniform}[Q(x) != 0] and compares it with 2^-d, d = number of factors.
/// Throws std::domain_error when Q vanishes on the whole cube.
OracleVerdict alon_furedi_check(std::span<const LinearForm> factors, std::size_t n,
                                std::size_t limit = kDefaultExhaustiveLimit);

/// max_a Pr_{x uniform}[L(x) = a] over the 2^k assignments of the k support
/// variables, against 1/sqrt(k); pass <=> measured^2 * k <= 1.
OracleVerdict littlewood_offord_check(const LinearForm& form, std::size_t limit = kDefaultExhaustiveLimit);

}  // namespace orpoly
