#include "orpoly/algebra.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace orpoly {

namespace {

void check_dimension(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                                " coordinates, got " + std::to_string(got));
  }
}

}  // namespace

LinearForm::LinearForm(std::map<Var, Rational> coeffs, Rational constant)
    : coeffs_(std::move(coeffs)), constant_(std::move(constant)) {
  constant_.canonicalize();
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->first == 0) throw std::invalid_argument("variable indices start at 1");
    it->second.canonicalize();
    if (it->second == 0) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

LinearForm LinearForm::sum_of(std::span<const Var> vars, const Rational& coeff) {
  std::map<Var, Rational> coeffs;
  for (Var v : vars) coeffs[v] += coeff;
  return LinearForm(std::move(coeffs));
}

Rational LinearForm::coefficient(Var v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<Var> LinearForm::support() const {
  std::vector<Var> vars;
  vars.reserve(coeffs_.size());
  for (const auto& [v, c] : coeffs_) vars.push_back(v);
  return vars;
}

HypCoverPoly::HypCoverPoly(std::size_t n, std::vector<LinearForm> forms) : n_(n) {
  forms_.reserve(forms.size());
  for (auto& f : forms) {
    if (!f.is_homogeneous()) {
      throw std::invalid_argument("hyperplane covering factors must be homogeneous (constant term 0)");
    }
    if (f.max_var() > n) {
      throw std::invalid_argument("form uses variable x" + std::to_string(f.max_var()) + " but n = " +
                                  std::to_string(n));
    }
    if (f.support_size() > 0) forms_.push_back(std::move(f));
  }
}

std::vector<Var> Restriction::stars() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == Assign::star) out.push_back(static_cast<Var>(i + 1));
  }
  return out;
}

Point Restriction::fill(std::span<const std::uint8_t> y) const {
  check_dimension(values_.size(), y.size());
  Point x(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    switch (values_[i]) {
      case Assign::zero: x[i] = 0; break;
      case Assign::one: x[i] = 1; break;
      case Assign::star: x[i] = y[i] ? 1 : 0; break;
    }
  }
  return x;
}

Rational eval(const LinearForm& form, std::span<const std::uint8_t> x) {
  if (form.max_var() > x.size()) {
    throw std::invalid_argument("dimension mismatch: point has " + std::to_string(x.size()) +
                                " coordinates, form uses x" + std::to_string(form.max_var()));
  }
  Rational acc = form.constant();
  for (const auto& [v, c] : form.coeffs()) {
    if (x[v - 1]) acc += c;
  }
  return acc;
}

Rational eval(const HypCoverPoly& poly, std::span<const std::uint8_t> x) {
  check_dimension(poly.n(), x.size());
  Rational prod = 1;
  for (const auto& f : poly.forms()) prod *= 1 - eval(f, x);
  return 1 - prod;
}

LinearForm restrict(const LinearForm& form, const Restriction& rho) {
  std::map<Var, Rational> kept;
  Rational constant = form.constant();
  for (const auto& [v, c] : form.coeffs()) {
    if (v > rho.n()) throw std::invalid_argument("restriction does not cover x" + std::to_string(v));
    switch (rho[v]) {
      case Assign::zero: break;
      case Assign::one: constant += c; break;
      case Assign::star: kept.emplace(v, c); break;
    }
  }
  return LinearForm(std::move(kept), std::move(constant));
}

HypCoverPoly compose_or(std::span<const HypCoverPoly> parts, std::size_t n) {
  std::vector<LinearForm> forms;
  for (const auto& p : parts) {
    if (p.n() != n) {
      throw std::invalid_argument("compose_or: parts disagree on n (" + std::to_string(p.n()) + " vs " +
                                  std::to_string(n) + ")");
    }
    forms.insert(forms.end(), p.forms().begin(), p.forms().end());
  }
  return HypCoverPoly(n, std::move(forms));
}

HypCoverPoly compose_or(std::span<const HypCoverPoly> parts) {
  if (parts.empty()) throw std::invalid_argument("compose_or: empty list needs an explicit n");
  return compose_or(parts, parts.front().n());
}

Point prefix_point(std::size_t n, std::size_t weight) {
  if (weight > n) throw std::invalid_argument("weight exceeds n");
  Point x(n, 0);
  for (std::size_t i = 0; i < weight; ++i) x[i] = 1;
  return x;
}

std::string format_form(const LinearForm& form) {
  std::string line;
  for (const auto& [v, c] : form.coeffs()) {
    if (!line.empty()) line += ' ';
    line += std::to_string(v) + ":" + to_string(c);
  }
  if (form.constant() != 0 || form.coeffs().empty()) {
    if (!line.empty()) line += ' ';
    line += "const:" + to_string(form.constant());
  }
  return line;
}

LinearForm parse_form(std::string_view line) {
  std::map<Var, Rational> coeffs;
  Rational constant = 0;
  bool any = false;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) {
    auto colon = token.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("malformed term '" + token + "'");
    std::string key = token.substr(0, colon);
    Rational value = parse_rational(std::string_view(token).substr(colon + 1));
    any = true;
    if (key == "const") {
      constant += value;
      continue;
    }
    unsigned long v = 0;
    try {
      std::size_t used = 0;
      v = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed variable index '" + key + "'");
    }
    if (v == 0 || v > UINT32_MAX) throw std::invalid_argument("variable index out of range: " + key);
    coeffs[static_cast<Var>(v)] += value;
  }
  if (!any) throw std::invalid_argument("empty form line");
  return LinearForm(std::move(coeffs), std::move(constant));
}

void write_forms(std::ostream& out, std::size_t n, std::span<const LinearForm> forms) {
  out << "n " << n << '\n';
  for (const auto& f : forms) out << format_form(f) << '\n';
}

void write_poly(std::ostream& out, const HypCoverPoly& poly) {
  write_forms(out, poly.n(), poly.forms());
}

FormFile read_forms(std::istream& in) {
  FormFile file;
  bool have_header = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!have_header) {
      std::istringstream hdr(line);
      std::string tag;
      long long n = -1;
      if (!(hdr >> tag >> n) || tag != "n" || n < 0) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": expected header 'n <count>'");
      }
      file.n = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    try {
      file.forms.push_back(parse_form(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (file.forms.back().max_var() > file.n) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": variable exceeds n");
    }
  }
  if (!have_header) throw std::invalid_argument("missing 'n <count>' header");
  return file;
}

HypCoverPoly read_poly(std::istream& in) {
  auto file = read_forms(in);
  return HypCoverPoly(file.n, std::move(file.forms));
}

}  // namespace orpoly
