#pragma once

#include <map>
#include <shared_mutex>
#include <vector>

#include "ogw/rational.hpp"

namespace ogw {

// Exact psi-class intersection numbers <tau_{a_1}...tau_{a_n}>_g over
// M-bar_{g,n} via the DVV/Virasoro recursion, with string and dilaton fast
// paths. Keys are canonical (sorted exponent multisets); the memo supports
// concurrent lookups with exclusive insertion.
class PsiCache {
public:
  // Returns 0 when sum(exponents) != 3g-3+n. Throws
  // psi_intersection.UnstableInput when 2g-2+n <= 0.
  Rational integral(int g, std::vector<int> exponents);

  static PsiCache& global();

private:
  using Key = std::pair<int, std::vector<int>>;
  std::map<Key, Rational> memo_;
  std::shared_mutex mu_;

  Rational compute(int g, const std::vector<int>& sorted_exps);
  Rational lookup(int g, std::vector<int> sorted_exps);
};

inline Rational psi_integral(int g, std::vector<int> exponents) {
  return PsiCache::global().integral(g, std::move(exponents));
}

}  // namespace ogw
