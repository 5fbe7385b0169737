#include "ogw/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace ogw {

namespace {

// Exact division of integer polynomials, quotient known to be integral.
std::vector<Integer> poly_divide_exact(const std::vector<Integer>& num,
                                       const std::vector<Integer>& den) {
  std::vector<Integer> rem = num;
  std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
  for (long i = static_cast<long>(rem.size()) - 1; i >= static_cast<long>(den.size()) - 1; --i) {
    if (rem[i] == 0) continue;
    Integer q = rem[i] / den.back();
    long shift = i - (static_cast<long>(den.size()) - 1);
    quot[shift] = q;
    for (size_t j = 0; j < den.size(); ++j) rem[shift + j] -= q * den[j];
  }
  return quot;
}

std::mutex phi_mutex;
std::map<int, std::vector<Integer>> phi_cache;

}  // namespace

const std::vector<Integer>& Cyclotomic::cyclotomic_polynomial(int n) {
  std::lock_guard<std::mutex> lock(phi_mutex);
  auto it = phi_cache.find(n);
  if (it != phi_cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
  // inside the lock (plain map recursion without re-locking).
  std::vector<int> stack{n};
  while (!stack.empty()) {
    int m = stack.back();
    if (phi_cache.count(m)) {
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (int d = 1; d < m; ++d)
      if (m % d == 0 && !phi_cache.count(d)) {
        stack.push_back(d);
        ready = false;
      }
    if (!ready) continue;
    std::vector<Integer> num(m + 1, Integer(0));
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d)
      if (m % d == 0) num = poly_divide_exact(num, phi_cache[d]);
    phi_cache[m] = std::move(num);
    stack.pop_back();
  }
  return phi_cache[n];
}

Cyclotomic::Cyclotomic(const Rational& q, int order) : order_(order) {
  require(order >= 1, "exact_algebra.BadOrder", "cyclotomic order must be >= 1");
  std::vector<Rational> dense(order_, Rational(0));
  dense[0] = q;
  reduce_from_dense(std::move(dense));
}

Cyclotomic Cyclotomic::root_of_unity(int order, long k) {
  require(order >= 1, "exact_algebra.BadOrder", "cyclotomic order must be >= 1");
  long kk = ((k % order) + order) % order;
  std::vector<Rational> dense(order, Rational(0));
  dense[static_cast<size_t>(kk)] = Rational(1);
  return from_power_coeffs(order, std::move(dense));
}

Cyclotomic Cyclotomic::from_power_coeffs(int order, std::vector<Rational> coeffs) {
  Cyclotomic c;
  c.order_ = order;
  require(order >= 1, "exact_algebra.BadOrder", "cyclotomic order must be >= 1");
  // Fold exponents >= order first (callers may pass unreduced powers).
  if (coeffs.size() > static_cast<size_t>(order)) {
    std::vector<Rational> dense(order, Rational(0));
    for (size_t k = 0; k < coeffs.size(); ++k) dense[k % order] += coeffs[k];
    coeffs = std::move(dense);
  } else {
    coeffs.resize(order, Rational(0));
  }
  c.reduce_from_dense(std::move(coeffs));
  return c;
}

void Cyclotomic::reduce_from_dense(std::vector<Rational> dense) {
  const std::vector<Integer>& phi = cyclotomic_polynomial(order_);
  size_t deg = phi.size() - 1;
  // Polynomial remainder modulo the monic Phi_N.
  for (long i = static_cast<long>(dense.size()) - 1; i >= static_cast<long>(deg); --i) {
    if (dense[i] == 0) continue;
    Rational q = dense[i];
    long shift = i - static_cast<long>(deg);
    for (size_t j = 0; j <= deg; ++j) dense[shift + j] -= q * Rational(phi[j]);
  }
  dense.resize(deg);
  c_ = std::move(dense);
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_part() const {
  require(is_rational(), "exact_algebra.NonRationalResult",
          "cyclotomic value is not rational: " + to_string());
  return c_[0];
}

Cyclotomic Cyclotomic::embedded(int bigger_order) const {
  require(bigger_order % order_ == 0, "exact_algebra.BadOrder",
          "embedding requires divisible orders");
  if (bigger_order == order_) return *this;
  int step = bigger_order / order_;
  std::vector<Rational> dense(bigger_order, Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) dense[k * step] += c_[k];
  return from_power_coeffs(bigger_order, std::move(dense));
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> dense(order_, Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) dense[(order_ - k) % order_] += c_[k];
  return from_power_coeffs(order_, std::move(dense));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& q : out.c_) q = -q;
  return out;
}

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  int n = lcm_int(a.order_, b.order_);
  Cyclotomic aa = a.embedded(n), bb = b.embedded(n);
  for (size_t i = 0; i < aa.c_.size(); ++i) aa.c_[i] += bb.c_[i];
  return aa;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  int n = lcm_int(a.order_, b.order_);
  Cyclotomic aa = a.embedded(n), bb = b.embedded(n);
  std::vector<Rational> dense(2 * aa.c_.size() + 1, Rational(0));
  for (size_t i = 0; i < aa.c_.size(); ++i) {
    if (aa.c_[i] == 0) continue;
    for (size_t j = 0; j < bb.c_.size(); ++j) {
      if (bb.c_[j] == 0) continue;
      dense[i + j] += aa.c_[i] * bb.c_[j];
    }
  }
  Cyclotomic out;
  out.order_ = n;
  out.reduce_from_dense(std::move(dense));
  return out;
}

Cyclotomic Cyclotomic::operator*(const Rational& q) const {
  Cyclotomic out = *this;
  for (auto& x : out.c_) x *= q;
  return out;
}

namespace {

// Rational polynomials as coefficient vectors, highest degree trimmed.
using RPoly = std::vector<Rational>;

void rtrim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rp_mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  rtrim(out);
  return out;
}

RPoly rp_sub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  rtrim(a);
  return a;
}

// Division with remainder over Q[x].
void rp_divmod(RPoly a, const RPoly& b, RPoly& q, RPoly& r) {
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    rtrim(a);
    if (a.size() < b.size()) break;
  }
  rtrim(q);
  r = std::move(a);
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  require(!is_zero(), "exact_algebra.DivisionByZero", "division by zero cyclotomic");
  // Extended Euclid for gcd(this, Phi_N) = 1 over Q[x].
  const std::vector<Integer>& phi_i = cyclotomic_polynomial(order_);
  RPoly r0(phi_i.size());
  for (size_t i = 0; i < phi_i.size(); ++i) r0[i] = Rational(phi_i[i]);
  RPoly r1(c_.begin(), c_.end());
  rtrim(r1);
  RPoly s0 = {}, s1 = {Rational(1)};  // coefficients of `this` in the Bezout combination
  while (!r1.empty()) {
    RPoly q, r2;
    rp_divmod(r0, r1, q, r2);
    RPoly s2 = rp_sub(s0, rp_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (a nonzero constant, since Phi_N is irreducible over Q).
  require(r0.size() == 1, "exact_algebra.InternalError", "cyclotomic gcd not constant");
  Rational inv_c = Rational(1) / r0[0];
  std::vector<Rational> dense(order_, Rational(0));
  for (size_t i = 0; i < s0.size() && i < dense.size(); ++i) dense[i] = s0[i] * inv_c;
  Cyclotomic out;
  out.order_ = order_;
  out.reduce_from_dense(std::move(dense));
  return out;
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  int n = lcm_int(a.order_, b.order_);
  return a.embedded(n) * b.embedded(n).inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  int n = lcm_int(a.order_, b.order_);
  return a.embedded(n).c_ == b.embedded(n).c_;
}

int Cyclotomic::compare_canonical(const Cyclotomic& a, const Cyclotomic& b) {
  require(a.order_ == b.order_, "exact_algebra.BadOrder",
          "canonical comparison requires equal ambient order");
  for (size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyclotomic::to_string() const {
  std::string out = "(";
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) out += " + ";
    out += rational_to_string(c_[k]);
    if (k > 0) out += "*z" + std::to_string(order_) + "^" + std::to_string(k);
    first = false;
  }
  if (first) out += "0";
  out += ")";
  return out;
}

}  // namespace ogw
