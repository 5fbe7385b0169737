#pragma once

#include <mutex>
#include <vector>

#include "ogw/rational.hpp"

namespace ogw {

// Bernoulli numbers and polynomials, convention B_1 = -1/2 (so B_1(x) = x - 1/2).
// Values are memoized; reads are guarded for concurrent use.
class BernoulliCache {
public:
  Rational number(unsigned t);

  // B_t(x) = sum_j C(t,j) B_j x^{t-j}
  Rational poly(unsigned t, const Rational& x);

  static BernoulliCache& global();

private:
  std::mutex mu_;
  std::vector<Rational> numbers_{Rational(1)};
};

inline Rational bernoulli_number(unsigned t) { return BernoulliCache::global().number(t); }
inline Rational bernoulli_poly(unsigned t, const Rational& x) {
  return BernoulliCache::global().poly(t, x);
}

}  // namespace ogw
