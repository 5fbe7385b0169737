#include "ogw/equivariant_scalar.hpp"

#include <algorithm>

namespace ogw {

EquivariantScalar EquivariantScalar::constant(int nvars, const Cyclotomic& c) {
  EquivariantScalar s(nvars);
  s.add_term(ExpVec(nvars, Rational(0)), c);
  return s;
}

EquivariantScalar EquivariantScalar::constant(int nvars, const Rational& q) {
  return constant(nvars, Cyclotomic(q));
}

EquivariantScalar EquivariantScalar::monomial(int nvars, ExpVec exps, const Cyclotomic& coeff) {
  require(static_cast<int>(exps.size()) == nvars, "exact_algebra.BadArity",
          "monomial exponent arity mismatch");
  EquivariantScalar s(nvars);
  s.add_term(exps, coeff);
  return s;
}

EquivariantScalar EquivariantScalar::variable_power(int nvars, int i, const Rational& e) {
  require(i >= 0 && i < nvars, "exact_algebra.BadArity", "variable index out of range");
  ExpVec exps(nvars, Rational(0));
  exps[i] = e;
  return monomial(nvars, std::move(exps), Cyclotomic(Rational(1)));
}

void EquivariantScalar::add_term(const ExpVec& e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void EquivariantScalar::check_compatible(const EquivariantScalar& a, const EquivariantScalar& b) {
  require(a.nvars_ == b.nvars_, "exact_algebra.BadArity",
          "equivariant scalars over different variable counts");
}

bool EquivariantScalar::has_rational_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_rational(); });
}

bool EquivariantScalar::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const ExpVec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](const Rational& x) { return x == 0; });
}

Cyclotomic EquivariantScalar::constant_part() const {
  require(is_constant(), "exact_algebra.NonConstant", "not a constant: " + to_string());
  if (terms_.empty()) return Cyclotomic();
  return terms_.begin()->second;
}

EquivariantScalar EquivariantScalar::operator-() const {
  EquivariantScalar out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

EquivariantScalar& EquivariantScalar::operator+=(const EquivariantScalar& b) {
  check_compatible(*this, b);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

EquivariantScalar operator+(const EquivariantScalar& a, const EquivariantScalar& b) {
  EquivariantScalar out = a;
  out += b;
  return out;
}

EquivariantScalar operator-(const EquivariantScalar& a, const EquivariantScalar& b) {
  EquivariantScalar out = a;
  out += (-b);
  return out;
}

EquivariantScalar operator*(const EquivariantScalar& a, const EquivariantScalar& b) {
  EquivariantScalar::check_compatible(a, b);
  EquivariantScalar out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      EquivariantScalar::ExpVec e(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

EquivariantScalar EquivariantScalar::operator*(const Cyclotomic& c) const {
  EquivariantScalar out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : terms_) out.add_term(e, x * c);
  return out;
}

EquivariantScalar EquivariantScalar::operator*(const Rational& q) const {
  return *this * Cyclotomic(q);
}

EquivariantScalar EquivariantScalar::monomial_inverse() const {
  require(terms_.size() == 1, "exact_algebra.NonMonomialDivision",
          "division by non-monomial equivariant scalar: " + to_string());
  const auto& [e, c] = *terms_.begin();
  ExpVec inv(nvars_);
  for (int i = 0; i < nvars_; ++i) inv[i] = -e[i];
  return monomial(nvars_, std::move(inv), c.inverse());
}

EquivariantScalar operator/(const EquivariantScalar& a, const EquivariantScalar& b) {
  return a * b.monomial_inverse();
}

EquivariantScalar EquivariantScalar::operator/(const Rational& q) const {
  require(q != 0, "exact_algebra.DivisionByZero", "division by zero rational");
  return *this * (Rational(1) / q);
}

EquivariantScalar EquivariantScalar::pow(long e) const {
  if (e == 0) return constant(nvars_, Rational(1));
  if (e < 0) return monomial_inverse().pow(-e);
  EquivariantScalar base = *this;
  EquivariantScalar out = constant(nvars_, Rational(1));
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) out *= base;
    if (n >>= 1) base *= base;
  }
  return out;
}

bool operator==(const EquivariantScalar& a, const EquivariantScalar& b) {
  if (a.nvars_ != b.nvars_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (!(ia->second == ib->second)) return false;
  }
  return true;
}

std::string EquivariantScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    out += c.to_string();
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      out += "*w" + std::to_string(i + 1) + "^(" + rational_to_string(e[i]) + ")";
    }
    first = false;
  }
  return out;
}

}  // namespace ogw
