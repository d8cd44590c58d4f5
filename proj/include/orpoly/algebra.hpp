#pragma once

#include "orpoly/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orpoly {

/// Variables are numbered 1..n.
using Var = std::uint32_t;

/// A point of the Boolean cube, one byte (0 or 1) per variable; x[i] is the
/// value of variable i + 1.
using Point = std::vector<std::uint8_t>;

/// Affine form  constant + sum_v coeffs[v] * x_v  with exact rational
/// coefficients. Zero coefficients are never stored, so the key set of the
/// coefficient map is exactly the support.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::map<Var, Rational> coeffs, Rational constant = 0);

  /// coeff * (x_{v1} + ... + x_{vk}).
  static LinearForm sum_of(std::span<const Var> vars, const Rational& coeff = 1);

  const std::map<Var, Rational>& coeffs() const { return coeffs_; }
  const Rational& constant() const { return constant_; }
  Rational coefficient(Var v) const;

  std::vector<Var> support() const;
  std::size_t support_size() const { return coeffs_.size(); }
  bool is_homogeneous() const { return constant_ == 0; }
  /// No variables and no constant: the identically zero form.
  bool is_zero() const { return coeffs_.empty() && constant_ == 0; }
  /// Largest variable index in the support, 0 when the support is empty.
  Var max_var() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::map<Var, Rational> coeffs_;
  Rational constant_ = 0;
};

/// P = 1 - prod_i (1 - L_i) over homogeneous forms L_i in n variables.
class HypCoverPoly {
 public:
  /// Drops forms with empty support; throws std::invalid_argument on an affine
  /// form or a variable outside 1..n.
  HypCoverPoly(std::size_t n, std::vector<LinearForm> forms);

  /// The empty product: P == 0 everywhere.
  static HypCoverPoly zero(std::size_t n) { return HypCoverPoly(n, {}); }

  std::size_t n() const { return n_; }
  const std::vector<LinearForm>& forms() const { return forms_; }
  std::size_t degree() const { return forms_.size(); }

  friend bool operator==(const HypCoverPoly&, const HypCoverPoly&) = default;

 private:
  std::size_t n_;
  std::vector<LinearForm> forms_;
};

enum class Assign : std::uint8_t { zero, one, star };

/// Partial assignment of variables 1..n to {0, 1, *}.
class Restriction {
 public:
  explicit Restriction(std::vector<Assign> values) : values_(std::move(values)) {}
  /// All variables free.
  static Restriction free(std::size_t n) { return Restriction(std::vector<Assign>(n, Assign::star)); }

  std::size_t n() const { return values_.size(); }
  Assign operator[](Var v) const { return values_.at(v - 1); }
  const std::vector<Assign>& values() const { return values_; }
  std::vector<Var> stars() const;

  /// rho o y: star variables take their value from y, the rest are fixed.
  Point fill(std::span<const std::uint8_t> y) const;

 private:
  std::vector<Assign> values_;
};

Rational eval(const LinearForm& form, std::span<const std::uint8_t> x);
Rational eval(const HypCoverPoly& poly, std::span<const std::uint8_t> x);

/// Zero-assigned variables are deleted, one-assigned variables are folded into
/// the constant, star variables are kept.
LinearForm restrict(const LinearForm& form, const Restriction& rho);

/// OR of hyperplane covering polynomials: the concatenation of their forms.
/// The empty list yields the constant-0 polynomial in n variables.
HypCoverPoly compose_or(std::span<const HypCoverPoly> parts, std::size_t n);
HypCoverPoly compose_or(std::span<const HypCoverPoly> parts);

inline std::size_t degree(const HypCoverPoly& poly) { return poly.degree(); }

inline bool or_value(std::span<const std::uint8_t> x) {
  for (auto b : x) {
    if (b) return true;
  }
  return false;
}

/// Point with the first `weight` coordinates set: 1^weight 0^(n - weight).
Point prefix_point(std::size_t n, std::size_t weight);

// Text format. One form per line as whitespace-separated "var:num/den" terms
// with an optional "const:num/den" term; the zero form is written "const:0/1".
// A file starts with a header line "n <count>"; blank lines and lines starting
// with '#' are ignored.

std::string format_form(const LinearForm& form);
LinearForm parse_form(std::string_view line);

struct FormFile {
  std::size_t n = 0;
  std::vector<LinearForm> forms;
};

void write_forms(std::ostream& out, std::size_t n, std::span<const LinearForm> forms);
void write_poly(std::ostream& out, const HypCoverPoly& poly);
FormFile read_forms(std::istream& in);
HypCoverPoly read_poly(std::istream& in);

}  // namespace orpoly
