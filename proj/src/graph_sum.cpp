#include "ogw/graph_sum.hpp"

#include <algorithm>

namespace ogw {

GraphSum::GraphSum(const ChenRuan& cr, int order, RConvention conv)
    : cr_(&cr), r_(build_rmatrix(cr, order, conv)), kern_(build_edge_kernel(r_)) {}

EquivariantScalar GraphSum::leaf_weight_ordinary(int marking, int height, const SlotSeries& s,
                                                 Normalization norm) const {
  int m = cr_->m();
  EquivariantScalar out(m);
  int k = height - s.a;  // z^k coefficient of R(-z) applied to coords * z^a
  if (k >= 0) {
    require(k <= r_.order, "graph_sum.OrderTooSmall", "leaf height exceeds truncation");
    const CharacterTable& t = cr_->table();
    for (int beta = 0; beta < r_.size; ++beta) {
      if (s.coords[beta].is_zero()) continue;
      EquivariantScalar rc = r_.neg_coeff(beta, marking, k);
      if (rc.is_zero()) continue;
      out += s.coords[beta] * rc * Rational(t.dims[beta], t.group_order);
    }
  }
  if (norm == Normalization::Equivariant && !out.is_zero())
    out *= cr_->euler_one_half_pow(-1);
  return out;
}

EquivariantScalar GraphSum::leaf_weight_dilaton(int marking, int height,
                                                Normalization norm) const {
  require(height >= 2, "graph_sum.HeightBelowTwo", "dilaton leaf needs height >= 2");
  require(height - 1 <= r_.order, "graph_sum.OrderTooSmall",
          "dilaton height exceeds truncation");
  int m = cr_->m();
  const CharacterTable& t = cr_->table();
  EquivariantScalar out(m);
  for (int beta = 0; beta < r_.size; ++beta) {
    EquivariantScalar rc = r_.neg_coeff(beta, marking, height - 1);
    if (rc.is_zero()) continue;
    out += rc * Rational(t.dims[beta], t.group_order);
  }
  out = -out;
  if (norm == Normalization::Equivariant && !out.is_zero())
    out *= cr_->euler_one_half_pow(-1);
  return out;
}

EquivariantScalar GraphSum::edge_weight(int m1, int m2, int k1, int k2) const {
  require(k1 <= r_.order - 1 && k2 <= r_.order - 1, "graph_sum.OrderTooSmall",
          "edge heights exceed truncation");
  return kern_.at(m1, m2).coeff(k1, k2);
}

EquivariantScalar GraphSum::vertex_weight(int genus, int marking,
                                          const std::vector<int>& heights,
                                          Normalization norm) const {
  int val = static_cast<int>(heights.size());
  Rational psi = psi_integral(genus, heights);
  int m = cr_->m();
  if (psi == 0) return EquivariantScalar(m);
  long e = 2L - 2 * genus - val;
  // sqrt(nu)^e, with the extra e_1^{-e/2} in the equivariant normalization.
  Rational root_nu = Rational(cr_->table().dims[marking], cr_->table().group_order);
  EquivariantScalar out = EquivariantScalar::constant(m, rational_pow(root_nu, e) * psi);
  if (norm == Normalization::Equivariant) out *= cr_->euler_one_half_pow(-e);
  return out;
}

EquivariantScalar GraphSum::graph_weight(const StableLabeledGraph& g,
                                         const std::vector<SlotSeries>& ordered_series,
                                         const SlotSeries* unordered_series,
                                         Normalization norm) const {
  int m = cr_->m();
  EquivariantScalar w = EquivariantScalar::constant(m, Rational(1));
  for (int v = 0; v < static_cast<int>(g.vertices.size()) && !w.is_zero(); ++v) {
    std::vector<int> heights;
    for (const auto& e : g.edges) {
      if (e.v1 == v) heights.push_back(e.k1);
      if (e.v2 == v) heights.push_back(e.k2);
    }
    for (const auto* leaves : {&g.ordered_leaves, &g.unordered_leaves, &g.dilaton_leaves})
      for (const auto& l : *leaves)
        if (l.vertex == v) heights.push_back(l.height);
    w *= vertex_weight(g.vertices[v].genus, g.vertices[v].marking, heights, norm);
  }
  for (const auto& e : g.edges) {
    if (w.is_zero()) break;
    w *= edge_weight(g.vertices[e.v1].marking, g.vertices[e.v2].marking, e.k1, e.k2);
  }
  for (size_t s = 0; s < g.ordered_leaves.size() && !w.is_zero(); ++s) {
    const auto& l = g.ordered_leaves[s];
    w *= leaf_weight_ordinary(g.vertices[l.vertex].marking, l.height, ordered_series[s], norm);
  }
  for (const auto& l : g.unordered_leaves) {
    if (w.is_zero()) break;
    w *= leaf_weight_ordinary(g.vertices[l.vertex].marking, l.height, *unordered_series, norm);
  }
  for (const auto& l : g.dilaton_leaves) {
    if (w.is_zero()) break;
    w *= leaf_weight_dilaton(g.vertices[l.vertex].marking, l.height, norm);
  }
  return w;
}

EquivariantScalar GraphSum::correlator_ordered(int genus,
                                               const std::vector<SlotSeries>& slots,
                                               Normalization norm) const {
  GraphEnumOptions opts;
  opts.num_markings = r_.size;
  auto graphs = enumerate_stable_graphs(genus, static_cast<int>(slots.size()), 0, opts);
  EquivariantScalar out(cr_->m());
  for (const auto& g : graphs) {
    EquivariantScalar w = graph_weight(g, slots, nullptr, norm);
    if (w.is_zero()) continue;
    out += w / Rational(g.aut_order);
  }
  return out;
}

EquivariantScalar GraphSum::correlator_unordered(int genus, const SlotSeries& series, int n,
                                                 Normalization norm) const {
  GraphEnumOptions opts;
  opts.num_markings = r_.size;
  auto graphs = enumerate_stable_graphs(genus, 0, n, opts);
  EquivariantScalar out(cr_->m());
  for (const auto& g : graphs) {
    EquivariantScalar w = graph_weight(g, {}, &series, norm);
    if (w.is_zero()) continue;
    out += w / Rational(g.aut_order);
  }
  return out;
}

std::vector<EquivariantScalar> insertion_phibar_coords(const ChenRuan& cr,
                                                       const Insertion& ins) {
  const CharacterTable& t = cr.table();
  const FiniteGroup& g = cr.group();
  int m = cr.m();
  int ni = t.num_irreps();
  std::vector<EquivariantScalar> coords(ni, EquivariantScalar(m));
  switch (ins.basis) {
    case InsertionBasis::PhiBar:
      require(ins.label >= 0 && ins.label < ni, "graph_sum.InvalidInput", "bad irrep label");
      coords[ins.label] = EquivariantScalar::constant(m, Rational(1));
      return coords;
    case InsertionBasis::ClassBar: {
      require(ins.label >= 0 && ins.label < g.num_classes(), "graph_sum.InvalidInput",
              "bad class label");
      // 1bar_h = |[h]| sum_gamma (chi_gamma(h)/d_gamma) phibar_gamma
      for (int gamma = 0; gamma < ni; ++gamma)
        coords[gamma] = EquivariantScalar::constant(
            m, t.value(gamma, ins.label) * Rational(g.class_size(ins.label), t.dims[gamma]));
      return coords;
    }
    case InsertionBasis::Class: {
      // 1_h = w^{age(h)} 1bar_h
      Insertion bar = ins;
      bar.basis = InsertionBasis::ClassBar;
      auto base = insertion_phibar_coords(cr, bar);
      EquivariantScalar mono = cr.age_monomial(ins.label);
      for (auto& c : base) c *= mono;
      return base;
    }
    case InsertionBasis::Phi: {
      // phi_gamma = (d/|G|) sum_classes chi(h^{-1}) w^{age(h)} 1bar_h
      require(ins.label >= 0 && ins.label < ni, "graph_sum.InvalidInput", "bad irrep label");
      for (int c = 0; c < g.num_classes(); ++c) {
        Cyclotomic coef = t.value_at_inverse(ins.label, c) * Rational(t.dims[ins.label], g.order);
        if (coef.is_zero()) continue;
        Insertion cls{InsertionBasis::ClassBar, c, ins.a};
        auto part = insertion_phibar_coords(cr, cls);
        EquivariantScalar mono = cr.age_monomial(c) * coef;
        for (int gamma = 0; gamma < ni; ++gamma) coords[gamma] += part[gamma] * mono;
      }
      return coords;
    }
  }
  fail("graph_sum.InvalidInput", "unknown basis");
}

std::vector<EquivariantScalar> insertion_phi_coords(const ChenRuan& cr, const Insertion& ins) {
  const CharacterTable& t = cr.table();
  const FiniteGroup& g = cr.group();
  int m = cr.m();
  int ni = t.num_irreps();
  std::vector<EquivariantScalar> coords(ni, EquivariantScalar(m));
  switch (ins.basis) {
    case InsertionBasis::Phi:
      require(ins.label >= 0 && ins.label < ni, "graph_sum.InvalidInput", "bad irrep label");
      coords[ins.label] = EquivariantScalar::constant(m, Rational(1));
      return coords;
    case InsertionBasis::Class: {
      require(ins.label >= 0 && ins.label < g.num_classes(), "graph_sum.InvalidInput",
              "bad class label");
      for (int gamma = 0; gamma < ni; ++gamma)
        coords[gamma] = EquivariantScalar::constant(
            m, t.value(gamma, ins.label) * Rational(g.class_size(ins.label), t.dims[gamma]));
      return coords;
    }
    case InsertionBasis::ClassBar: {
      // 1bar_h = w^{-age(h)} 1_h
      Insertion plain = ins;
      plain.basis = InsertionBasis::Class;
      auto base = insertion_phi_coords(cr, plain);
      EquivariantScalar mono = cr.age_monomial(ins.label).monomial_inverse();
      for (auto& c : base) c *= mono;
      return base;
    }
    case InsertionBasis::PhiBar: {
      require(ins.label >= 0 && ins.label < ni, "graph_sum.InvalidInput", "bad irrep label");
      for (int c = 0; c < g.num_classes(); ++c) {
        Cyclotomic coef = t.value_at_inverse(ins.label, c) * Rational(t.dims[ins.label], g.order);
        if (coef.is_zero()) continue;
        Insertion cls{InsertionBasis::Class, c, ins.a};
        auto part = insertion_phi_coords(cr, cls);
        EquivariantScalar mono = cr.age_monomial(c).monomial_inverse() * coef;
        for (int gamma = 0; gamma < ni; ++gamma) coords[gamma] += part[gamma] * mono;
      }
      return coords;
    }
  }
  fail("graph_sum.InvalidInput", "unknown basis");
}

EquivariantScalar correlator(const GraphSum& gs, int genus, const std::vector<Insertion>& ins,
                             Normalization norm, bool ordered) {
  const ChenRuan& cr = gs.chen_ruan();
  auto to_slot = [&](const Insertion& i) {
    SlotSeries s;
    s.a = i.a;
    s.coords = norm == Normalization::Equivariant ? insertion_phibar_coords(cr, i)
                                                  : insertion_phi_coords(cr, i);
    return s;
  };
  EquivariantScalar out(cr.m());
  if (ordered) {
    std::vector<SlotSeries> slots;
    for (const auto& i : ins) slots.push_back(to_slot(i));
    out = gs.correlator_ordered(genus, slots, norm);
  } else {
    require(!ins.empty(), "graph_sum.InvalidInput", "need at least one insertion");
    for (size_t j = 1; j < ins.size(); ++j)
      require(ins[j].basis == ins[0].basis && ins[j].label == ins[0].label &&
                  ins[j].a == ins[0].a,
              "graph_sum.InvalidInput", "unordered correlator requires equal insertions");
    EquivariantScalar sum =
        gs.correlator_unordered(genus, to_slot(ins[0]), static_cast<int>(ins.size()), norm);
    out = sum * Rational(factorial(static_cast<unsigned>(ins.size())));
  }
  require(out.has_rational_coefficients(), "graph_sum.NonRationalCoefficient",
          "correlator coefficients failed to cancel to rationals");
  return out;
}

}  // namespace ogw
