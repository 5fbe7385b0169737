#pragma once

#include <map>
#include <string>
#include <vector>

#include "ogw/cyclotomic.hpp"

namespace ogw {

// Laurent polynomial in the equivariant parameters w_1..w_m with rational
// exponents and Cyclotomic coefficients. Zero has an empty term map; the term
// map (sorted lexicographically by exponent sequence) is the canonical form.
class EquivariantScalar {
public:
  using ExpVec = std::vector<Rational>;

  EquivariantScalar() : nvars_(0) {}
  explicit EquivariantScalar(int nvars) : nvars_(nvars) {}

  static EquivariantScalar constant(int nvars, const Cyclotomic& c);
  static EquivariantScalar constant(int nvars, const Rational& q);
  static EquivariantScalar monomial(int nvars, ExpVec exps, const Cyclotomic& coeff);
  // w_i^e
  static EquivariantScalar variable_power(int nvars, int i, const Rational& e);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ExpVec, Cyclotomic>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  bool is_monomial() const { return terms_.size() == 1; }
  // All coefficients lie in Q.
  bool has_rational_coefficients() const;
  // True constant (single term with all exponents zero), possibly zero.
  bool is_constant() const;
  // Requires is_constant() or zero.
  Cyclotomic constant_part() const;

  EquivariantScalar operator-() const;
  friend EquivariantScalar operator+(const EquivariantScalar& a, const EquivariantScalar& b);
  friend EquivariantScalar operator-(const EquivariantScalar& a, const EquivariantScalar& b);
  friend EquivariantScalar operator*(const EquivariantScalar& a, const EquivariantScalar& b);
  EquivariantScalar& operator+=(const EquivariantScalar& b);
  EquivariantScalar& operator-=(const EquivariantScalar& b) { return *this += (-b); }
  EquivariantScalar& operator*=(const EquivariantScalar& b) { return *this = *this * b; }

  EquivariantScalar operator*(const Cyclotomic& c) const;
  EquivariantScalar operator*(const Rational& q) const;

  // Division is restricted to Laurent monomials (and nonzero scalars): every
  // formula in scope divides only by monomials, so anything else is a hard
  // error that doubles as a formula-sanity check.
  friend EquivariantScalar operator/(const EquivariantScalar& a, const EquivariantScalar& b);
  EquivariantScalar operator/(const Rational& q) const;

  // Integer power; negative exponents require a monomial.
  EquivariantScalar pow(long e) const;
  // Monomial inverse; throws NonMonomialDivision otherwise.
  EquivariantScalar monomial_inverse() const;

  friend bool operator==(const EquivariantScalar& a, const EquivariantScalar& b);
  friend bool operator!=(const EquivariantScalar& a, const EquivariantScalar& b) {
    return !(a == b);
  }

  std::string to_string() const;

private:
  int nvars_;
  std::map<ExpVec, Cyclotomic> terms_;

  void add_term(const ExpVec& e, const Cyclotomic& c);
  static void check_compatible(const EquivariantScalar& a, const EquivariantScalar& b);
};

inline EquivariantScalar operator*(const Rational& q, const EquivariantScalar& s) {
  return s * q;
}
inline EquivariantScalar operator*(const Cyclotomic& c, const EquivariantScalar& s) {
  return s * c;
}

}  // namespace ogw
