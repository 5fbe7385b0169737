#include "ogw/psi_integrals.hpp"
#include <mutex>

#include <algorithm>
#include <numeric>

#include "ogw/error.hpp"

namespace ogw {

PsiCache& PsiCache::global() {
  static PsiCache cache;
  return cache;
}

Rational PsiCache::integral(int g, std::vector<int> exponents) {
  int n = static_cast<int>(exponents.size());
  require(g >= 0, "psi_intersection.UnstableInput", "negative genus");
  for (int a : exponents)
    require(a >= 0, "psi_intersection.UnstableInput", "negative psi exponent");
  require(2 * g - 2 + n > 0, "psi_intersection.UnstableInput",
          "unstable (g,n) = (" + std::to_string(g) + "," + std::to_string(n) + ")");
  long total = std::accumulate(exponents.begin(), exponents.end(), 0L);
  if (total != 3L * g - 3 + n) return Rational(0);
  std::sort(exponents.begin(), exponents.end());
  return lookup(g, std::move(exponents));
}

Rational PsiCache::lookup(int g, std::vector<int> key_exps) {
  Key key{g, std::move(key_exps)};
  {
    std::shared_lock rd(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Rational value = compute(g, key.second);
  std::unique_lock wr(mu_);
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

namespace {

// Stable correlator access with dimension bookkeeping handled by the caller;
// drops unstable factors by returning 0 via the guard below.
bool stable(int g, int n) { return 2 * g - 2 + n > 0; }

}  // namespace

Rational PsiCache::compute(int g, const std::vector<int>& exps) {
  int n = static_cast<int>(exps.size());

  // Base cases.
  if (g == 0 && n == 3) return Rational(1);  // <tau_0^3>_0
  if (g == 1 && n == 1) return Rational(1, 24);  // <tau_1>_1

  auto recurse = [this](int gg, std::vector<int> ee) -> Rational {
    int nn = static_cast<int>(ee.size());
    if (!stable(gg, nn)) return Rational(0);
    long tot = std::accumulate(ee.begin(), ee.end(), 0L);
    if (tot != 3L * gg - 3 + nn) return Rational(0);
    std::sort(ee.begin(), ee.end());
    return lookup(gg, std::move(ee));
  };

  // String equation: remove a tau_0 insertion.
  if (exps.front() == 0 && stable(g, n - 1)) {
    Rational out(0);
    for (int j = 1; j < n; ++j) {
      if (exps[j] == 0) continue;
      std::vector<int> rest(exps.begin() + 1, exps.end());
      rest[j - 1] -= 1;
      out += recurse(g, std::move(rest));
    }
    return out;
  }

  // Dilaton equation: remove a tau_1 insertion.
  if (exps.front() <= 1 && stable(g, n - 1)) {
    auto it = std::find(exps.begin(), exps.end(), 1);
    if (it != exps.end()) {
      std::vector<int> rest = exps;
      rest.erase(rest.begin() + (it - exps.begin()));
      return Rational(2 * g - 2 + (n - 1)) * recurse(g, std::move(rest));
    }
  }

  // DVV on the largest exponent k:
  // (2k+1)!! <tau_k prod tau_{a_i}>_g =
  //   sum_j ((2k+2a_j-1)!!/(2a_j-1)!!) <tau_{k+a_j-1} prod_{i!=j}>_g
  // + 1/2 sum_{b1+b2=k-2} (2b1+1)!!(2b2+1)!! ( <tau_{b1}tau_{b2} prod>_{g-1}
  //   + sum over ordered genus/index splits of the product of two factors ).
  int k = exps.back();
  require(k >= 2, "psi_intersection.InternalError",
          "DVV reached a key it cannot reduce");  // string/dilaton handle k <= 1
  std::vector<int> rest(exps.begin(), exps.end() - 1);
  int m = static_cast<int>(rest.size());

  Rational rhs(0);
  for (int j = 0; j < m; ++j) {
    std::vector<int> next = rest;
    next.erase(next.begin() + j);
    next.push_back(k + rest[j] - 1);
    Rational coeff = Rational(odd_double_factorial(2L * (k + rest[j]) - 1)) /
                     Rational(odd_double_factorial(2L * rest[j] - 1));
    rhs += coeff * recurse(g, std::move(next));
  }

  for (int b1 = 0; b1 <= k - 2; ++b1) {
    int b2 = k - 2 - b1;
    Rational dcoeff = Rational(odd_double_factorial(2L * b1 + 1)) *
                      Rational(odd_double_factorial(2L * b2 + 1));
    Rational boundary(0);
    // Nonseparating degeneration.
    if (g >= 1) {
      std::vector<int> next = rest;
      next.push_back(b1);
      next.push_back(b2);
      boundary += recurse(g - 1, std::move(next));
    }
    // Separating degenerations: ordered pairs of (genus, index subset).
    for (int g1 = 0; g1 <= g; ++g1) {
      int g2 = g - g1;
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> left{b1}, right{b2};
        for (int j = 0; j < m; ++j)
          (mask >> j & 1 ? left : right).push_back(rest[j]);
        if (!stable(g1, static_cast<int>(left.size())) ||
            !stable(g2, static_cast<int>(right.size())))
          continue;
        boundary += recurse(g1, std::move(left)) * recurse(g2, std::move(right));
      }
    }
    rhs += dcoeff * boundary / Rational(2);
  }

  return rhs / Rational(odd_double_factorial(2L * k + 1));
}

}  // namespace ogw
