#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ogw/rational.hpp"

namespace ogw {

// Exact element of Q(zeta_N). Canonical form: coefficient vector on the power
// basis 1, zeta, ..., zeta^{phi(N)-1} after reduction modulo the N-th
// cyclotomic polynomial. Equality of canonical forms is equality of numbers.
class Cyclotomic {
public:
  Cyclotomic() : order_(1), c_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& q, int order = 1);

  // zeta_N^k
  static Cyclotomic root_of_unity(int order, long k);
  // From a dense exponent vector of length `order` (powers 0..order-1); reduced.
  static Cyclotomic from_power_coeffs(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  // Reduced coefficients, length phi(order).
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  Rational rational_part() const;

  // Image in Q(zeta_M), N | M.
  Cyclotomic embedded(int bigger_order) const;

  // Complex conjugation (zeta -> zeta^{-1}).
  Cyclotomic conj() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  // Exact division; throws DivisionByZero when b == 0.
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  Cyclotomic operator*(const Rational& q) const;
  Cyclotomic inverse() const;

  // Numbers compare equal across ambient orders (both are embedded first).
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Deterministic total order on canonical forms at equal ambient order
  // (used only for reproducible sorting, not number comparison).
  static int compare_canonical(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

  // Monic cyclotomic polynomial Phi_N as integer coefficients (degree phi(N)).
  static const std::vector<Integer>& cyclotomic_polynomial(int n);

private:
  int order_;
  std::vector<Rational> c_;  // length deg Phi_N

  void reduce_from_dense(std::vector<Rational> dense);
};

inline Cyclotomic operator*(const Rational& q, const Cyclotomic& c) { return c * q; }

}  // namespace ogw
