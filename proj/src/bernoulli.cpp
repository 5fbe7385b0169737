#include "ogw/bernoulli.hpp"

namespace ogw {

BernoulliCache& BernoulliCache::global() {
  static BernoulliCache cache;
  return cache;
}

Rational BernoulliCache::number(unsigned t) {
  std::lock_guard<std::mutex> lock(mu_);
  // sum_{j=0}^{m} C(m+1,j) B_j = 0 for m >= 1
  while (numbers_.size() <= t) {
    unsigned m = static_cast<unsigned>(numbers_.size());
    Rational s(0);
    for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * numbers_[j];
    numbers_.push_back(-s / Rational(binomial(m + 1, m)));
  }
  return numbers_[t];
}

Rational BernoulliCache::poly(unsigned t, const Rational& x) {
  Rational out(0);
  for (unsigned j = 0; j <= t; ++j)
    out += Rational(binomial(t, j)) * number(j) * rational_pow(x, static_cast<long>(t - j));
  return out;
}

}  // namespace ogw
