#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ogw/psi_integrals.hpp"

using namespace ogw;

TEST_CASE("base values and known integrals") {
  CHECK(psi_integral(0, {0, 0, 0}) == Rational(1));
  CHECK(psi_integral(1, {1}) == Rational(1, 24));
  CHECK(psi_integral(2, {4}) == Rational(1, 1152));
  CHECK(psi_integral(0, {0, 0, 0, 1}) == Rational(1));
  CHECK(psi_integral(0, {1, 1, 0, 0, 0}) == Rational(2));
  CHECK(psi_integral(0, {0, 0, 0, 0, 2}) == Rational(1));
  CHECK(psi_integral(1, {0, 2}) == Rational(1, 24));
  CHECK(psi_integral(1, {1, 1}) == Rational(1, 24));
  CHECK(psi_integral(2, {2, 3}) == Rational(29, 5760));
  CHECK(psi_integral(2, {0, 5}) == Rational(1, 1152));
  CHECK(psi_integral(3, {7}) == Rational(1, 82944));
}

TEST_CASE("dimension mismatch gives zero; instability throws") {
  CHECK(psi_integral(0, {1, 0, 0}) == Rational(0));
  CHECK(psi_integral(1, {3}) == Rational(0));
  CHECK_THROWS_WITH_AS((void)psi_integral(0, {0, 0}), doctest::Contains("UnstableInput"),
                       Error);
  CHECK_THROWS_WITH_AS((void)psi_integral(1, {}), doctest::Contains("UnstableInput"), Error);
}

TEST_CASE("the seed <tau_1>_1 is consistent with the DVV identity") {
  // 15 <tau_2 tau_0>_1 = 3 <tau_1>_1 + 1/2 <tau_0^3>_0, and string gives
  // <tau_2 tau_0>_1 = <tau_1>_1.
  Rational t1 = psi_integral(1, {1});
  Rational t20 = psi_integral(1, {2, 0});
  CHECK(t20 == t1);
  CHECK(Rational(15) * t20 == Rational(3) * t1 + Rational(1, 2) * psi_integral(0, {0, 0, 0}));
}

namespace {

// 200 seeded random stable keys with g <= 3, n <= 6.
std::vector<std::pair<int, std::vector<int>>> random_stable_keys() {
  std::mt19937_64 rng(0xd15a);
  std::vector<std::pair<int, std::vector<int>>> keys;
  while (keys.size() < 200) {
    int g = static_cast<int>(rng() % 4);
    int n = 1 + static_cast<int>(rng() % 6);
    if (2 * g - 2 + n <= 0) continue;
    long dim = 3L * g - 3 + n;
    std::vector<int> exps(n, 0);
    // random composition of dim
    for (long unit = 0; unit < dim; ++unit) ++exps[rng() % n];
    keys.push_back({g, exps});
  }
  return keys;
}

}  // namespace

TEST_CASE("string equation on 200 seeded random stable keys") {
  for (auto& [g, exps] : random_stable_keys()) {
    int n = static_cast<int>(exps.size());
    if (2 * g - 2 + n + 1 <= 0) continue;
    std::vector<int> with_zero = exps;
    with_zero.push_back(0);
    Rational lhs = psi_integral(g, with_zero);
    Rational rhs(0);
    for (int j = 0; j < n; ++j) {
      if (exps[j] == 0) continue;
      std::vector<int> lower = exps;
      --lower[j];
      rhs += psi_integral(g, lower);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("dilaton equation on the same keys") {
  for (auto& [g, exps] : random_stable_keys()) {
    int n = static_cast<int>(exps.size());
    std::vector<int> with_one = exps;
    with_one.push_back(1);
    Rational lhs = psi_integral(g, with_one);
    CHECK(lhs == Rational(2 * g - 2 + n) * psi_integral(g, exps));
  }
}

TEST_CASE("permutation invariance under shuffled input order") {
  std::mt19937_64 rng(17);
  for (auto& [g, exps] : random_stable_keys()) {
    std::vector<int> shuffled = exps;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(psi_integral(g, exps) == psi_integral(g, shuffled));
  }
}
