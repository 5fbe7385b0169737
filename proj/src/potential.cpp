#include "ogw/potential.hpp"

#include <numeric>

namespace ogw {

int PotentialPolynomial::total_degree(const Key& key) {
  return std::accumulate(key.exps.begin(), key.exps.end(), 0);
}

void PotentialPolynomial::add_term(const Key& key, const EquivariantScalar& c) {
  if (c.is_zero()) return;
  if (key.hbar > trunc_.hbar_cap) return;
  if (total_degree(key) > trunc_.u_degree) return;
  require(key.hbar >= -trunc_.u_degree, "oracle.InternalError",
          "hbar power below the feasible range");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EquivariantScalar PotentialPolynomial::coefficient(const Key& key) const {
  auto it = terms_.find(key);
  if (it == terms_.end()) return EquivariantScalar(scalar_vars_);
  return it->second;
}

PotentialPolynomial PotentialPolynomial::operator+(const PotentialPolynomial& b) const {
  PotentialPolynomial out = *this;
  out += b;
  return out;
}

PotentialPolynomial& PotentialPolynomial::operator+=(const PotentialPolynomial& b) {
  for (const auto& [k, c] : b.terms_) add_term(k, c);
  return *this;
}

PotentialPolynomial PotentialPolynomial::operator-(const PotentialPolynomial& b) const {
  PotentialPolynomial out = *this;
  for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
  return out;
}

PotentialPolynomial PotentialPolynomial::operator*(const PotentialPolynomial& b) const {
  PotentialPolynomial out(trunc_, scalar_vars_);
  for (const auto& [ka, ca] : terms_) {
    int da = total_degree(ka);
    for (const auto& [kb, cb] : b.terms_) {
      if (da + total_degree(kb) > trunc_.u_degree) continue;
      if (ka.hbar + kb.hbar > trunc_.hbar_cap) continue;
      Key k;
      k.hbar = ka.hbar + kb.hbar;
      k.exps.resize(ka.exps.size());
      for (size_t i = 0; i < k.exps.size(); ++i)
        k.exps[i] = static_cast<std::uint8_t>(ka.exps[i] + kb.exps[i]);
      out.add_term(k, ca * cb);
    }
  }
  return out;
}

PotentialPolynomial PotentialPolynomial::scaled(const Rational& q) const {
  PotentialPolynomial out(trunc_, scalar_vars_);
  for (const auto& [k, c] : terms_) out.add_term(k, c * q);
  return out;
}

PotentialPolynomial potential_exp(const PotentialPolynomial& p) {
  {
    PotentialPolynomial::Key zero_key;
    zero_key.exps.assign(p.truncation().num_vars(), 0);
    require(p.coefficient(zero_key).is_zero(), "oracle.NonzeroConstantTerm",
            "potential exp requires zero constant term");
  }
  PotentialPolynomial out(p.truncation(), p.scalar_vars());
  PotentialPolynomial::Key one_key;
  one_key.exps.assign(p.truncation().num_vars(), 0);
  out.add_term(one_key, EquivariantScalar::constant(p.scalar_vars(), Rational(1)));
  PotentialPolynomial power = out;
  int cap = p.truncation().u_degree + p.truncation().hbar_cap + p.truncation().u_degree + 2;
  Rational kfac(1);
  for (int k = 1; k <= cap; ++k) {
    power = power * p;
    if (power.is_zero()) break;
    kfac *= Rational(k);
    out += power.scaled(Rational(1) / kfac);
  }
  return out;
}

PotentialPolynomial potential_log(const PotentialPolynomial& p) {
  PotentialPolynomial::Key one_key;
  one_key.exps.assign(p.truncation().num_vars(), 0);
  require(p.coefficient(one_key) == EquivariantScalar::constant(p.scalar_vars(), Rational(1)),
          "oracle.NonUnitConstantTerm", "potential log requires constant term 1");
  PotentialPolynomial x = p;
  x.add_term(one_key, EquivariantScalar::constant(p.scalar_vars(), Rational(-1)));
  PotentialPolynomial out(p.truncation(), p.scalar_vars());
  PotentialPolynomial power(p.truncation(), p.scalar_vars());
  power.add_term(one_key, EquivariantScalar::constant(p.scalar_vars(), Rational(1)));
  int cap = p.truncation().u_degree + 2 * p.truncation().hbar_cap + p.truncation().u_degree + 4;
  for (int k = 1; k <= cap; ++k) {
    power = power * x;
    if (power.is_zero()) break;
    out += power.scaled(Rational(k % 2 ? 1 : -1, k));
  }
  return out;
}

namespace {

// Multisets of n heights (sorted ascending) with given sum and entries <= cap.
void for_each_height_multiset(int n, long sum, int cap,
                              const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur(n);
  std::function<void(int, long, int)> rec = [&](int idx, long rem, int minimum) {
    if (idx == n) {
      if (rem == 0) fn(cur);
      return;
    }
    for (int x = minimum; x <= cap && x <= rem; ++x) {
      cur[idx] = x;
      rec(idx + 1, rem - x, x);
    }
  };
  if (sum >= 0) rec(0, sum, 0);
}

}  // namespace

PotentialPolynomial bg_log_potential(const CharacterTable& table,
                                     const PotentialTruncation& trunc, int scalar_vars) {
  PotentialPolynomial out(trunc, scalar_vars);
  int ni = table.num_irreps();
  require(trunc.num_irreps == ni, "oracle.InvalidInput", "truncation irrep count mismatch");
  for (int g = 0; g <= trunc.hbar_cap + 1; ++g) {
    for (int n = 1; n <= trunc.u_degree; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      long dim = 3L * g - 3 + n;
      if (dim < 0) continue;
      for_each_height_multiset(n, dim, trunc.height_cap, [&](const std::vector<int>& hs) {
        Rational psi = psi_integral(g, hs);
        if (psi == 0) return;
        // per-irrep coefficient nu^{1-g} psi / prod(multiplicities!)
        std::map<int, int> mult;
        for (int h : hs) ++mult[h];
        Rational sym(1);
        for (const auto& [h, c] : mult) sym *= Rational(factorial(static_cast<unsigned>(c)));
        for (int gamma = 0; gamma < ni; ++gamma) {
          Rational coeff = rational_pow(table.nu[gamma], 1L - g) * psi / sym;
          PotentialPolynomial::Key key;
          key.hbar = g - 1;
          key.exps.assign(trunc.num_vars(), 0);
          for (int h : hs) ++key.exps[trunc.var(gamma, h)];
          out.add_term(key, EquivariantScalar::constant(scalar_vars, coeff));
        }
      });
    }
  }
  return out;
}

PotentialPolynomial bg_potential(const CharacterTable& table, const PotentialTruncation& trunc,
                                 int scalar_vars) {
  return potential_exp(bg_log_potential(table, trunc, scalar_vars));
}

}  // namespace ogw
