#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ogw/error.hpp"

namespace ogw {

// Exact arithmetic substrate. Rational is GMP's canonical mpq (denominator > 0,
// gcd-reduced); Integer is mpz.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  require(den != 0, "exact_algebra.DivisionByZero", "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& s);

// Minimal form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& q);
// Explicit form: always "p/q".
std::string rational_to_string_pq(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Floor of a rational, as Integer.
Integer rational_floor(const Rational& q);

Integer factorial(unsigned n);
// (2n-1)!! with (-1)!! = 1.
Integer odd_double_factorial(long n);
Integer binomial(unsigned n, unsigned k);
Integer lcm_integer(const Integer& a, const Integer& b);

// q^e for integer e (e < 0 requires q != 0).
Rational rational_pow(const Rational& q, long e);

}  // namespace ogw
