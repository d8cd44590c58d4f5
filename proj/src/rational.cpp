#include "orpoly/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace orpoly {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// 2^k <= value, for any integer k.
bool pow2_le(long k, const Rational& value) {
  BigInt lhs = value.get_den();
  BigInt rhs = value.get_num();
  if (k >= 0) {
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return lhs <= rhs;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("not an exact rational (expected num/den): '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? BigInt(-n) : n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

double to_double(const Rational& value) { return mpq_get_d(value.get_mpq_t()); }

Rational pow2(long e) {
  BigInt p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

Rational pow(const Rational& base, unsigned long e) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return Rational(num, den);
}

long floor_log2(const Rational& value) {
  if (value <= 0) throw std::domain_error("floor_log2 of a non-positive value");
  long k = static_cast<long>(mpz_sizeinbase(value.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(value.get_den_mpz_t(), 2));
  while (!pow2_le(k, value)) --k;
  while (pow2_le(k + 1, value)) ++k;
  return k;
}

long ceil_log2(const Rational& value) {
  long k = floor_log2(value);
  return value == pow2(k) ? k : k + 1;
}

double log2(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log2 of a non-positive integer");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, value.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

bool log2_at_most(const Rational& value, const Rational& bound) {
  if (value <= 0) throw std::domain_error("log2 of a non-positive value");
  const long fl = floor_log2(value);
  if (bound >= fl + 1) return true;
  if (bound < fl) return false;
  if (value == pow2(fl)) return true;  // log2 = fl <= bound
  // log2(value) is irrational here; decide value^v <= 2^u with bound = u/v.
  const BigInt& u = bound.get_num();
  const BigInt& v = bound.get_den();
  if (!v.fits_ulong_p() || !u.fits_slong_p()) {
    throw std::overflow_error("log2 comparison exponent too large");
  }
  const unsigned long vv = v.get_ui();
  const long uu = u.get_si();
  BigInt lhs;
  BigInt rhs;
  mpz_pow_ui(lhs.get_mpz_t(), value.get_num_mpz_t(), vv);
  mpz_pow_ui(rhs.get_mpz_t(), value.get_den_mpz_t(), vv);
  if (uu >= 0) {
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(uu));
  } else {
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(-uu));
  }
  return lhs <= rhs;
}

}  // namespace orpoly
