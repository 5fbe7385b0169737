#include <doctest.h>

#include <algorithm>
#include <set>

#include "ogw/group.hpp"

using namespace ogw;

TEST_CASE("cyclic groups") {
  FiniteGroup c1 = FiniteGroup::builtin("cyclic", 1);
  CHECK(c1.order == 1);
  CHECK(c1.num_classes() == 1);
  FiniteGroup c3 = FiniteGroup::builtin("cyclic", 3);
  CHECK(c3.order == 3);
  CHECK(c3.num_classes() == 3);
  CHECK(c3.exponent == 3);
}

TEST_CASE("3-cycle generator gives cyclic group of order 3") {
  FiniteGroup g = FiniteGroup::from_permutations({{1, 2, 0}});
  CHECK(g.order == 3);
  CHECK(g.num_classes() == 3);
}

TEST_CASE("transposition and 3-cycle generate S3 with class sizes 1,2,3") {
  FiniteGroup g = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  CHECK(g.order == 6);
  std::multiset<long> sizes;
  for (int c = 0; c < g.num_classes(); ++c) sizes.insert(g.class_size(c));
  CHECK(sizes == std::multiset<long>{1, 2, 3});
}

TEST_CASE("empty and invalid generator input") {
  CHECK_THROWS_WITH_AS((void)FiniteGroup::from_permutations({}),
                       doctest::Contains("InvalidPermutation"), Error);
  CHECK_THROWS_WITH_AS((void)FiniteGroup::from_permutations({{0, 0, 1}}),
                       doctest::Contains("InvalidPermutation"), Error);
}

TEST_CASE("closure cap is enforced") {
  // full symmetric group on 7 letters exceeds a cap of 2000
  CHECK_THROWS_WITH_AS(
      (void)FiniteGroup::from_permutations({{1, 0, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6, 0}}),
      doctest::Contains("ClosureExceedsCap"), Error);
}

TEST_CASE("binary dihedral groups") {
  FiniteGroup q8 = FiniteGroup::builtin("binary_dihedral", 2);
  CHECK(q8.order == 8);
  CHECK(q8.num_classes() == 5);
  std::multiset<long> sizes;
  for (int c = 0; c < q8.num_classes(); ++c) sizes.insert(q8.class_size(c));
  CHECK(sizes == std::multiset<long>{1, 1, 2, 2, 2});

  CHECK(FiniteGroup::builtin("binary_dihedral", 3).order == 12);
  CHECK(FiniteGroup::builtin("quaternion", 2).order == 8);
}

TEST_CASE("binary dihedral presentation relations hold elementwise") {
  for (int n = 1; n <= 4; ++n) {
    FiniteGroup g = FiniteGroup::builtin("binary_dihedral", n);
    int a = 1;            // a^1 in the canonical order a^0..a^{2n-1}, b a^0..
    int b = 2 * n;        // b a^0
    CHECK(g.power(a, 2 * n) == 0);                       // a^{2n} = 1
    CHECK(g.mul(b, b) == g.power(a, n));                 // b^2 = a^n
    int bab = g.mul(g.mul(b, a), g.invert(b));
    CHECK(bab == g.invert(a));                           // b a b^{-1} = a^{-1}
  }
}

TEST_CASE("unknown family and bad parameters") {
  CHECK_THROWS_WITH_AS((void)FiniteGroup::builtin("sporadic", 1),
                       doctest::Contains("UnknownFamily"), Error);
  CHECK_THROWS_WITH_AS((void)FiniteGroup::builtin("cyclic", 0),
                       doctest::Contains("ParameterOutOfRange"), Error);
  CHECK_THROWS_WITH_AS((void)FiniteGroup::builtin("symmetric", 7),
                       doctest::Contains("ParameterOutOfRange"), Error);
}

TEST_CASE("conjugacy classes, centralizers, powers") {
  FiniteGroup s3 = FiniteGroup::builtin("symmetric", 3);
  CHECK(s3.conjugacy_class_of(0) == 0);
  CHECK(s3.centralizer_order_of(0) == 6);
  // a transposition has centralizer of order 2 and sits in the class of size 3
  int transposition = -1;
  for (int h = 1; h < 6; ++h)
    if (s3.element_order[h] == 2) {
      transposition = h;
      break;
    }
  REQUIRE(transposition > 0);
  CHECK(s3.centralizer_order_of(transposition) == 2);
  CHECK(s3.class_size(s3.conjugacy_class_of(transposition)) == 3);

  // a^2 is central in binary_dihedral(2)
  FiniteGroup q8 = FiniteGroup::builtin("binary_dihedral", 2);
  int a2 = q8.power(1, 2);
  CHECK(q8.class_size(q8.conjugacy_class_of(a2)) == 1);
}

TEST_CASE("group structural invariants") {
  for (auto [family, n] : std::vector<std::pair<const char*, int>>{
           {"cyclic", 6}, {"dihedral", 4}, {"symmetric", 4}, {"binary_dihedral", 3}}) {
    FiniteGroup g = FiniteGroup::builtin(family, n);
    // conjugation preserves classes
    for (int x = 0; x < g.order; ++x)
      for (int y = 0; y < g.order; ++y)
        CHECK(g.class_of[g.mul(g.mul(x, y), g.invert(x))] == g.class_of[y]);
    // class equation
    long sum = 0;
    for (int c = 0; c < g.num_classes(); ++c) {
      sum += g.class_size(c);
      CHECK(g.order % g.class_size(c) == 0);
      CHECK(g.class_size(c) * g.centralizer_order[c] == g.order);
    }
    CHECK(sum == g.order);
    CHECK(g.order % g.exponent == 0);
    // element orders match inverses; power() is consistent
    for (int h = 0; h < g.order; ++h) {
      CHECK(g.element_order[h] == g.element_order[g.invert(h)]);
      CHECK(g.power(h, g.element_order[h]) == 0);
      CHECK(g.power(h, -1) == g.invert(h));
    }
  }
}

TEST_CASE("mult table input validation") {
  CHECK_THROWS_WITH_AS((void)FiniteGroup::from_mult_table({{0, 1}, {1, 1}}),
                       doctest::Contains("InvalidTable"), Error);
  // Z/2 works
  FiniteGroup c2 = FiniteGroup::from_mult_table({{0, 1}, {1, 0}});
  CHECK(c2.order == 2);
}
