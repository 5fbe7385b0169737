#include <doctest.h>

#include <random>

#include "ogw/json_io.hpp"

using namespace ogw;

TEST_CASE("rational serialization forms") {
  CHECK(rational_to_string(Rational(-1)) == "-1");
  CHECK(rational_to_string(Rational(2, 3)) == "2/3");
  CHECK(rational_to_string_pq(Rational(1)) == "1/1");
  CHECK(rational_from_string("-7/21") == Rational(-1, 3));
  CHECK(rational_from_string("5") == Rational(5));
  CHECK_THROWS_WITH_AS((void)rational_from_string("x"), doctest::Contains("ParseError"),
                       Error);
  CHECK_THROWS_WITH_AS((void)rational_from_string("1/0"),
                       doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("cyclotomic json round trip") {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 25; ++trial) {
    int order = 1 + static_cast<int>(rng() % 12);
    std::vector<Rational> dense(order, Rational(0));
    for (int k = 0; k < order; ++k)
      dense[k] = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
    Cyclotomic c = Cyclotomic::from_power_coeffs(order, dense);
    Json j = cyclotomic_to_json(c);
    CHECK(cyclotomic_from_json(j) == c);
  }
}

TEST_CASE("equivariant scalar json round trip and term order") {
  EquivariantScalar s =
      EquivariantScalar::variable_power(2, 0, Rational(-1)) +
      EquivariantScalar::variable_power(2, 1, Rational(1, 2)) * Rational(3, 4);
  Json j = equivariant_to_json(s);
  CHECK(equivariant_from_json(j) == s);
  // terms are sorted lexicographically by exponent sequence
  CHECK(j[0]["exps"][0].get<std::string>() == "-1");
  CHECK(j[1]["exps"][0].get<std::string>() == "0");
}

TEST_CASE("the spec fixture value 1/w1 serializes to the expected json") {
  EquivariantScalar v = EquivariantScalar::variable_power(1, 0, Rational(-1));
  Json j = equivariant_to_json(v);
  Json expect = Json::parse(R"([{"coeff":{"order":1,"terms":[[0,"1/1"]]},"exps":["-1"]}])");
  CHECK(j == expect);
}

TEST_CASE("group descriptors") {
  FiniteGroup a = group_from_descriptor(Json{{"family", "cyclic"}, {"n", 4}});
  CHECK(a.order == 4);
  FiniteGroup b = group_from_descriptor(
      Json::parse(R"({"permutations": [[1,0,2],[1,2,0]]})"));
  CHECK(b.order == 6);
  FiniteGroup c = group_from_descriptor(Json::parse(R"({"mult_table": [[0,1],[1,0]]})"));
  CHECK(c.order == 2);
  CHECK_THROWS_WITH_AS((void)group_from_descriptor(Json::object()),
                       doctest::Contains("ConfigInvalid"), Error);
}

TEST_CASE("character table json round trip with validation") {
  FiniteGroup g = FiniteGroup::builtin("binary_dihedral", 2);
  CharacterTable t = character_table(g);
  Json j = character_table_to_json(t);
  CharacterTable back = character_table_from_json(g, j);
  CHECK(back.dims == t.dims);
  for (int a = 0; a < t.num_irreps(); ++a)
    for (int c = 0; c < t.num_classes(); ++c) CHECK(back.value(a, c) == t.value(a, c));
  // corrupting a value must be rejected
  j["irreps"][0]["values"][1] = cyclotomic_to_json(Cyclotomic(Rational(2)));
  CHECK_THROWS_AS((void)character_table_from_json(g, j), Error);
}

TEST_CASE("insertions and repspec parsing") {
  auto ins = insertions_from_json(Json::parse(
      R"([{"basis":"phibar","label":1,"a":2},{"basis":"class","label":0}])"));
  REQUIRE(ins.size() == 2);
  CHECK(ins[0].basis == InsertionBasis::PhiBar);
  CHECK(ins[0].a == 2);
  CHECK(ins[1].basis == InsertionBasis::Class);
  CHECK(ins[1].a == 0);
  CHECK(repspec_from_json(Json::parse(R"({"summands":[2,0]})")).summands ==
        std::vector<int>{2, 0});
  CHECK_THROWS_WITH_AS((void)insertions_from_json(Json::parse(R"([{"basis":"bad","label":0}])")),
                       doctest::Contains("ConfigInvalid"), Error);
}
