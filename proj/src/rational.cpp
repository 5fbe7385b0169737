#include "ogw/rational.hpp"

namespace ogw {

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    fail("exact_algebra.ParseError", "bad rational literal '" + s + "'");
  require(q.get_den() != 0, "exact_algebra.DivisionByZero",
          "rational literal with zero denominator '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string rational_to_string_pq(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer rational_floor(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer odd_double_factorial(long n) {
  if (n <= 0) return 1;
  Integer f = 1;
  for (long k = n; k >= 1; k -= 2) f *= k;
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Integer lcm_integer(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Rational rational_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  require(q != 0 || e > 0, "exact_algebra.DivisionByZero", "0 raised to negative power");
  Rational base = e > 0 ? q : Rational(1) / q;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational out(1);
  while (n) {
    if (n & 1) out *= base;
    base *= base;
    n >>= 1;
  }
  return out;
}

}  // namespace ogw
