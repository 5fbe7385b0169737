#pragma once

#include <vector>

#include "ogw/equivariant_scalar.hpp"

namespace ogw {

// Formal power series in z (one variable) or (z, w) (two variables), truncated
// at total degree <= order in each variable, with EquivariantScalar
// coefficients. Two-variable series store the full coefficient rectangle up to
// (order, order) so edge weights can read mixed coefficients.
class TruncatedSeries {
public:
  TruncatedSeries() : vars_(1), order_(0), scalar_vars_(0) {}
  TruncatedSeries(int vars, int order, int scalar_vars);

  static TruncatedSeries zero(int vars, int order, int scalar_vars) {
    return TruncatedSeries(vars, order, scalar_vars);
  }
  static TruncatedSeries constant(int vars, int order, const EquivariantScalar& c);

  int vars() const { return vars_; }
  int order() const { return order_; }
  int scalar_vars() const { return scalar_vars_; }

  // One-variable access.
  const EquivariantScalar& coeff(int k) const;
  void set_coeff(int k, const EquivariantScalar& c);
  // Two-variable access.
  const EquivariantScalar& coeff(int k, int l) const;
  void set_coeff(int k, int l, const EquivariantScalar& c);

  bool is_zero() const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries& operator+=(const TruncatedSeries& b) { return *this = *this + b; }

  TruncatedSeries operator*(const EquivariantScalar& c) const;

  // z -> -z (resp. z -> -z, w -> -w componentwise sign flip by degree).
  TruncatedSeries negated_variable() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

private:
  int vars_;         // 1 or 2
  int order_;        // truncation order D
  int scalar_vars_;  // arity of the EquivariantScalar coefficients
  std::vector<EquivariantScalar> c_;  // size D+1 or (D+1)^2 (row-major in z)

  size_t idx(int k, int l) const { return static_cast<size_t>(k) * (order_ + 1) + l; }
  static void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b);
};

// exp of a series with zero constant term; throws NonzeroConstantTerm.
TruncatedSeries series_exp(const TruncatedSeries& s);

// Outer product of one-variable series a(z), b(w) into a two-variable series.
TruncatedSeries outer_product(const TruncatedSeries& a, const TruncatedSeries& b);

// The unique Q with (z+w) * Q = N up to truncation; requires N to vanish on
// the antidiagonal w = -z up to the truncation order, else NotDivisible.
TruncatedSeries divide_by_z_plus_w(const TruncatedSeries& num);

}  // namespace ogw
