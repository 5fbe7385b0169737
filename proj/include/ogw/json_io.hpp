#pragma once

#include <json.hpp>

#include "ogw/character_table.hpp"
#include "ogw/graph_sum.hpp"
#include "ogw/group.hpp"
#include "ogw/stable_graphs.hpp"
#include "ogw/truncated_series.hpp"

namespace ogw {

using Json = nlohmann::json;

// Rationals: minimal form ("-1", "2/3") on output; both forms accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {"order": N, "terms": [[k, "p/q"], ...]} with terms sorted by exponent and
// rationals always in p/q form.
Json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

// [{"exps": ["a/b", ...], "coeff": <cyc>}, ...] sorted lexicographically.
Json equivariant_to_json(const EquivariantScalar& s);
EquivariantScalar equivariant_from_json(const Json& j);

// One-variable series as the coefficient list by z-power.
Json series_to_json(const TruncatedSeries& s);

// {"family": ..., "n": k} | {"permutations": [[...]]} | {"mult_table": [[...]]}
FiniteGroup group_from_descriptor(const Json& j, int cap = FiniteGroup::kDefaultCap);
Json group_to_json(const FiniteGroup& g);

// {"classes": [sizes], "irreps": [{"dim": d, "values": [<cyc>, ...]}, ...]}
Json character_table_to_json(const CharacterTable& t);
CharacterTable character_table_from_json(const FiniteGroup& g, const Json& j);

// {"summands": [irrep_index, ...]}
RepSpec repspec_from_json(const Json& j);

// [{"basis": "phibar|phi|class|classbar", "label": i, "a": k}, ...]
std::vector<Insertion> insertions_from_json(const Json& j);

Json graph_to_json(const StableLabeledGraph& g);

}  // namespace ogw
