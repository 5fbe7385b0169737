#include "ogw/json_io.hpp"

namespace ogw {

Json rational_to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  require(j.is_string(), "cli.ConfigInvalid", "rational must be a string or integer");
  return rational_from_string(j.get<std::string>());
}

Json cyclotomic_to_json(const Cyclotomic& c) {
  Json terms = Json::array();
  const auto& coeffs = c.coeffs();
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    terms.push_back(Json::array({k, rational_to_string_pq(coeffs[k])}));
  }
  return Json{{"order", c.order()}, {"terms", terms}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  require(j.is_object() && j.contains("order") && j.contains("terms"), "cli.ConfigInvalid",
          "cyclotomic must be {\"order\":...,\"terms\":[...]}");
  int order = j.at("order").get<int>();
  std::vector<Rational> dense(order, Rational(0));
  for (const auto& t : j.at("terms")) {
    require(t.is_array() && t.size() == 2, "cli.ConfigInvalid", "bad cyclotomic term");
    long k = t[0].get<long>();
    require(k >= 0 && k < order, "cli.ConfigInvalid", "cyclotomic exponent out of range");
    dense[k] += rational_from_json(t[1]);
  }
  return Cyclotomic::from_power_coeffs(order, std::move(dense));
}

Json equivariant_to_json(const EquivariantScalar& s) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms()) {
    Json exps = Json::array();
    for (const auto& q : e) exps.push_back(rational_to_string(q));
    out.push_back(Json{{"exps", exps}, {"coeff", cyclotomic_to_json(c)}});
  }
  return out;
}

EquivariantScalar equivariant_from_json(const Json& j) {
  require(j.is_array(), "cli.ConfigInvalid", "equivariant scalar must be an array of terms");
  int nvars = -1;
  EquivariantScalar out;
  for (const auto& t : j) {
    std::vector<Rational> exps;
    for (const auto& e : t.at("exps")) exps.push_back(rational_from_json(e));
    if (nvars < 0) {
      nvars = static_cast<int>(exps.size());
      out = EquivariantScalar(nvars);
    }
    out += EquivariantScalar::monomial(nvars, exps, cyclotomic_from_json(t.at("coeff")));
  }
  return out;
}

Json series_to_json(const TruncatedSeries& s) {
  require(s.vars() == 1, "cli.ConfigInvalid", "series output is one-variable");
  Json out = Json::array();
  for (int k = 0; k <= s.order(); ++k) out.push_back(equivariant_to_json(s.coeff(k)));
  return out;
}

FiniteGroup group_from_descriptor(const Json& j, int cap) {
  require(j.is_object(), "cli.ConfigInvalid", "group descriptor must be an object");
  if (j.contains("family")) {
    require(j.contains("n"), "cli.ConfigInvalid", "builtin descriptor needs \"n\"");
    return FiniteGroup::builtin(j.at("family").get<std::string>(), j.at("n").get<int>(), cap);
  }
  if (j.contains("permutations")) {
    std::vector<std::vector<int>> gens;
    for (const auto& p : j.at("permutations")) gens.push_back(p.get<std::vector<int>>());
    return FiniteGroup::from_permutations(gens, cap);
  }
  if (j.contains("mult_table")) {
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("mult_table")) table.push_back(row.get<std::vector<int>>());
    require(static_cast<int>(table.size()) <= cap, "group_core.ClosureExceedsCap",
            "multiplication table larger than cap");
    return FiniteGroup::from_mult_table(std::move(table));
  }
  fail("cli.ConfigInvalid",
       "group descriptor needs \"family\", \"permutations\", or \"mult_table\"");
}

Json group_to_json(const FiniteGroup& g) {
  Json classes = Json::array();
  for (int c = 0; c < g.num_classes(); ++c)
    classes.push_back(Json{{"representative", g.class_rep[c]},
                           {"size", g.class_size(c)},
                           {"centralizer", g.centralizer_order[c]},
                           {"element_order", g.element_order[g.class_rep[c]]},
                           {"inverse_class", g.inverse_class[c]}});
  return Json{{"order", g.order}, {"exponent", g.exponent}, {"classes", classes}};
}

Json character_table_to_json(const CharacterTable& t) {
  Json classes = Json::array();
  for (long s : t.class_sizes) classes.push_back(s);
  Json irreps = Json::array();
  for (int a = 0; a < t.num_irreps(); ++a) {
    Json values = Json::array();
    for (int c = 0; c < t.num_classes(); ++c) values.push_back(cyclotomic_to_json(t.value(a, c)));
    irreps.push_back(Json{{"dim", t.dims[a]}, {"values", values}});
  }
  return Json{{"classes", classes}, {"irreps", irreps}};
}

CharacterTable character_table_from_json(const FiniteGroup& g, const Json& j) {
  require(j.is_object() && j.contains("irreps"), "cli.ConfigInvalid",
          "character table needs \"irreps\"");
  if (j.contains("classes")) {
    const auto& sizes = j.at("classes");
    require(static_cast<int>(sizes.size()) == g.num_classes(), "char_theory.InvalidTable",
            "class count mismatch");
    for (int c = 0; c < g.num_classes(); ++c)
      require(sizes[c].get<long>() == g.class_size(c), "char_theory.InvalidTable",
              "class size mismatch");
  }
  std::vector<int> dims;
  std::vector<std::vector<Cyclotomic>> values;
  for (const auto& row : j.at("irreps")) {
    dims.push_back(row.at("dim").get<int>());
    std::vector<Cyclotomic> vals;
    for (const auto& v : row.at("values")) vals.push_back(cyclotomic_from_json(v));
    values.push_back(std::move(vals));
  }
  return character_table_from_parts(g, std::move(dims), std::move(values));
}

RepSpec repspec_from_json(const Json& j) {
  RepSpec rep;
  if (j.is_array()) {
    rep.summands = j.get<std::vector<int>>();
  } else {
    require(j.is_object() && j.contains("summands"), "cli.ConfigInvalid",
            "rep spec needs \"summands\"");
    rep.summands = j.at("summands").get<std::vector<int>>();
  }
  return rep;
}

std::vector<Insertion> insertions_from_json(const Json& j) {
  require(j.is_array(), "cli.ConfigInvalid", "insertions must be an array");
  std::vector<Insertion> out;
  for (const auto& e : j) {
    Insertion ins;
    std::string basis = e.at("basis").get<std::string>();
    if (basis == "phibar")
      ins.basis = InsertionBasis::PhiBar;
    else if (basis == "phi")
      ins.basis = InsertionBasis::Phi;
    else if (basis == "class")
      ins.basis = InsertionBasis::Class;
    else if (basis == "classbar")
      ins.basis = InsertionBasis::ClassBar;
    else
      fail("cli.ConfigInvalid", "unknown basis '" + basis + "'");
    ins.label = e.at("label").get<int>();
    ins.a = e.value("a", 0);
    out.push_back(ins);
  }
  return out;
}

Json graph_to_json(const StableLabeledGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices)
    vertices.push_back(Json{{"genus", v.genus}, {"marking", v.marking}});
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back(Json{{"v1", e.v1}, {"k1", e.k1}, {"v2", e.v2}, {"k2", e.k2}});
  auto leaves_json = [](const std::vector<GraphLeaf>& ls) {
    Json out = Json::array();
    for (const auto& l : ls) out.push_back(Json{{"vertex", l.vertex}, {"height", l.height}});
    return out;
  };
  return Json{{"vertices", vertices},
              {"edges", edges},
              {"ordered_leaves", leaves_json(g.ordered_leaves)},
              {"unordered_leaves", leaves_json(g.unordered_leaves)},
              {"dilaton_leaves", leaves_json(g.dilaton_leaves)},
              {"aut", g.aut_order.get_str()}};
}

}  // namespace ogw
