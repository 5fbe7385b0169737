#include "ogw/truncated_series.hpp"

namespace ogw {

TruncatedSeries::TruncatedSeries(int vars, int order, int scalar_vars)
    : vars_(vars), order_(order), scalar_vars_(scalar_vars) {
  require(vars == 1 || vars == 2, "exact_algebra.BadArity", "series must have 1 or 2 variables");
  require(order >= 0, "exact_algebra.BadArity", "series order must be >= 0");
  size_t n = vars == 1 ? static_cast<size_t>(order + 1)
                       : static_cast<size_t>(order + 1) * (order + 1);
  c_.assign(n, EquivariantScalar(scalar_vars));
}

TruncatedSeries TruncatedSeries::constant(int vars, int order, const EquivariantScalar& c) {
  TruncatedSeries s(vars, order, c.nvars());
  s.c_[0] = c;
  return s;
}

const EquivariantScalar& TruncatedSeries::coeff(int k) const {
  require(vars_ == 1, "exact_algebra.BadArity", "single-index access on 2-variable series");
  require(k >= 0 && k <= order_, "exact_algebra.BadArity", "series index out of range");
  return c_[k];
}

void TruncatedSeries::set_coeff(int k, const EquivariantScalar& c) {
  require(vars_ == 1, "exact_algebra.BadArity", "single-index access on 2-variable series");
  require(k >= 0 && k <= order_, "exact_algebra.BadArity", "series index out of range");
  require(c.nvars() == scalar_vars_, "exact_algebra.BadArity", "coefficient arity mismatch");
  c_[k] = c;
}

const EquivariantScalar& TruncatedSeries::coeff(int k, int l) const {
  require(vars_ == 2, "exact_algebra.BadArity", "double-index access on 1-variable series");
  require(k >= 0 && k <= order_ && l >= 0 && l <= order_, "exact_algebra.BadArity",
          "series index out of range");
  return c_[idx(k, l)];
}

void TruncatedSeries::set_coeff(int k, int l, const EquivariantScalar& c) {
  require(vars_ == 2, "exact_algebra.BadArity", "double-index access on 1-variable series");
  require(k >= 0 && k <= order_ && l >= 0 && l <= order_, "exact_algebra.BadArity",
          "series index out of range");
  require(c.nvars() == scalar_vars_, "exact_algebra.BadArity", "coefficient arity mismatch");
  c_[idx(k, l)] = c;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  require(a.vars_ == b.vars_ && a.order_ == b.order_ && a.scalar_vars_ == b.scalar_vars_,
          "exact_algebra.BadArity", "series shape mismatch");
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries::check_compatible(a, b);
  TruncatedSeries out = a;
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a + (-b);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries::check_compatible(a, b);
  TruncatedSeries out(a.vars_, a.order_, a.scalar_vars_);
  int D = a.order_;
  if (a.vars_ == 1) {
    for (int i = 0; i <= D; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= D; ++j) {
        if (b.c_[j].is_zero()) continue;
        out.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
  } else {
    for (int i = 0; i <= D; ++i)
      for (int j = 0; j <= D; ++j) {
        if (a.c_[a.idx(i, j)].is_zero()) continue;
        for (int k = 0; i + k <= D; ++k)
          for (int l = 0; j + l <= D; ++l) {
            if (b.c_[b.idx(k, l)].is_zero()) continue;
            out.c_[out.idx(i + k, j + l)] += a.c_[a.idx(i, j)] * b.c_[b.idx(k, l)];
          }
      }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const EquivariantScalar& c) const {
  TruncatedSeries out = *this;
  for (auto& x : out.c_) x = x * c;
  return out;
}

TruncatedSeries TruncatedSeries::negated_variable() const {
  TruncatedSeries out = *this;
  if (vars_ == 1) {
    for (int k = 1; k <= order_; k += 2) out.c_[k] = -out.c_[k];
  } else {
    for (int k = 0; k <= order_; ++k)
      for (int l = 0; l <= order_; ++l)
        if ((k + l) % 2) out.c_[idx(k, l)] = -out.c_[idx(k, l)];
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.vars_ != b.vars_ || a.order_ != b.order_ || a.scalar_vars_ != b.scalar_vars_)
    return false;
  return a.c_ == b.c_;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
  bool const_zero = s.vars() == 1 ? s.coeff(0).is_zero() : s.coeff(0, 0).is_zero();
  require(const_zero, "exact_algebra.NonzeroConstantTerm",
          "series exp requires zero constant term");
  EquivariantScalar one = EquivariantScalar::constant(s.scalar_vars(), Rational(1));
  TruncatedSeries out = TruncatedSeries::constant(s.vars(), s.order(), one);
  TruncatedSeries power = out;
  // The total z-degree (resp. z+w degree) of s^k grows with k, so D+... terms
  // beyond 2*order cannot contribute; stop when the power vanishes.
  int max_k = s.vars() == 1 ? s.order() : 2 * s.order();
  Rational kfac(1);
  for (int k = 1; k <= max_k; ++k) {
    power = power * s;
    if (power.is_zero()) break;
    kfac *= Rational(k);
    TruncatedSeries term = power * EquivariantScalar::constant(s.scalar_vars(), Rational(1) / kfac);
    out += term;
  }
  return out;
}

TruncatedSeries outer_product(const TruncatedSeries& a, const TruncatedSeries& b) {
  require(a.vars() == 1 && b.vars() == 1, "exact_algebra.BadArity",
          "outer product takes two 1-variable series");
  require(a.order() == b.order() && a.scalar_vars() == b.scalar_vars(),
          "exact_algebra.BadArity", "outer product shape mismatch");
  TruncatedSeries out(2, a.order(), a.scalar_vars());
  for (int k = 0; k <= a.order(); ++k) {
    if (a.coeff(k).is_zero()) continue;
    for (int l = 0; l <= b.order(); ++l) {
      if (b.coeff(l).is_zero()) continue;
      out.set_coeff(k, l, a.coeff(k) * b.coeff(l));
    }
  }
  return out;
}

TruncatedSeries divide_by_z_plus_w(const TruncatedSeries& num) {
  require(num.vars() == 2, "exact_algebra.BadArity", "divide_by_z_plus_w takes a (z,w) series");
  int D = num.order();
  int m = num.scalar_vars();
  // Precondition: N vanishes at w = -z, i.e. alternating antidiagonal sums vanish.
  for (int s = 0; s <= D; ++s) {
    EquivariantScalar acc(m);
    for (int k = 0; k <= s; ++k) {
      const EquivariantScalar& c = num.coeff(k, s - k);
      acc += (k % 2) ? -c : c;
    }
    require(acc.is_zero(), "exact_algebra.NotDivisible",
            "numerator does not vanish at w = -z (antidiagonal degree " + std::to_string(s) +
                ")");
  }
  // (z+w) Q = N gives N_{a,b} = Q_{a-1,b} + Q_{a,b-1}; solve along increasing b:
  // Q_{a,b} = N_{a+1,b} - Q_{a+1,b-1}.
  TruncatedSeries quot(2, D, m);
  for (int b = 0; b <= D - 1; ++b)
    for (int a = D - 1; a >= 0; --a) {
      if (a + b > D - 1) continue;
      EquivariantScalar q = num.coeff(a + 1, b);
      if (b > 0 && a + 1 <= D) q -= quot.coeff(a + 1, b - 1);
      quot.set_coeff(a, b, q);
    }
  return quot;
}

}  // namespace ogw
