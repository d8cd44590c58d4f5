#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace orpoly {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "num/den" or "num" (optionally signed). Decimal notation is rejected
/// so that boundary parameters stay exact. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" text, always with an explicit denominator.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

double to_double(const Rational& value);

/// 2^e as an exact rational; e may be negative.
Rational pow2(long e);

Rational pow(const Rational& base, unsigned long e);

/// Largest integer k with 2^k <= value. Requires value > 0.
long floor_log2(const Rational& value);

/// Smallest integer k with 2^k >= value. Requires value > 0.
long ceil_log2(const Rational& value);

/// log2 of a positive big integer, accurate to double precision even when
/// the integer does not fit in a double.
double log2(const BigInt& value);

/// Exact test of log2(value) <= bound for value > 0. Integer arithmetic only.
bool log2_at_most(const Rational& value, const Rational& bound);

}  // namespace orpoly
