#include "ogw/quantization.hpp"

#include <functional>

namespace ogw {

namespace {

struct LOperatorData {
  // Per (summand, t): E_{t+1} entries and row sums, with zero matrices skipped.
  struct Slice {
    int summand;
    int t;
    std::vector<std::vector<Cyclotomic>> e;  // [a][b]
    std::vector<Cyclotomic> row_sum;         // sum_b E^a_b
    bool all_zero = true;
  };
  std::vector<Slice> slices;
};

LOperatorData build_l_data(const ChenRuan& cr, const PotentialTruncation& trunc,
                           const QuantConvention& conv) {
  LOperatorData data;
  int ni = cr.table().num_irreps();
  // z-power t is bounded by what the truncation can absorb: the linear terms
  // need a height <= height_cap, the quadratic term heights l, t-1-l <= cap.
  int tmax = 2 * trunc.height_cap + 1;
  for (int i = 0; i < cr.m(); ++i)
    for (int t = 1; t <= tmax; ++t) {
      LOperatorData::Slice s;
      s.summand = i;
      s.t = t;
      unsigned bt = conv.r == RConvention::BNext ? static_cast<unsigned>(t + 1)
                                                 : static_cast<unsigned>(t);
      s.e = e_matrix(cr, i, bt);
      s.row_sum.assign(ni, Cyclotomic());
      for (int a = 0; a < ni; ++a)
        for (int b = 0; b < ni; ++b) {
          if (s.e[a][b].is_zero()) continue;
          s.all_zero = false;
          s.row_sum[a] += s.e[a][b];
        }
      if (!s.all_zero) data.slices.push_back(std::move(s));
    }
  return data;
}

PotentialPolynomial apply_l_with_data(const ChenRuan& cr, const LOperatorData& data,
                                      const PotentialPolynomial& p,
                                      const QuantConvention& conv, int single_t) {
  const PotentialTruncation& trunc = p.truncation();
  int m = cr.m();
  PotentialPolynomial out(trunc, p.scalar_vars());

  for (const auto& s : data.slices) {
    if (single_t > 0 && s.t != single_t) continue;
    int t = s.t;
    Rational pref = Rational((t % 2) ? -1 : 1, static_cast<long>(t) * (t + 1));
    EquivariantScalar wfac =
        EquivariantScalar::variable_power(m, s.summand, Rational(-t)) * pref;
    int ni = cr.table().num_irreps();

    for (const auto& [key, coeff] : p.terms()) {
      EquivariantScalar base = coeff * wfac;

      // (1) linear dilaton-shift term: + sum_a (sum_b E^a_b) d/du^a_{a_lin}
      int a_lin = conv.dilaton_linear_next ? t + 1 : t;
      if (a_lin <= trunc.height_cap) {
        for (int a = 0; a < ni; ++a) {
          if (s.row_sum[a].is_zero()) continue;
          int va = trunc.var(a, a_lin);
          int paw = key.exps[va];
          if (paw == 0) continue;
          PotentialPolynomial::Key k = key;
          --k.exps[va];
          out.add_term(k, base * s.row_sum[a] * Rational(paw));
        }
      }

      // (2) - sum_{a,b,l} E^a_b u^b_l d/du^a_{l+t}
      for (int l = 0; l + t <= trunc.height_cap; ++l) {
        for (int a = 0; a < ni; ++a) {
          int va = trunc.var(a, l + t);
          int paw = key.exps[va];
          if (paw == 0) continue;
          for (int b = 0; b < ni; ++b) {
            if (s.e[a][b].is_zero()) continue;
            PotentialPolynomial::Key k = key;
            --k.exps[va];
            ++k.exps[trunc.var(b, l)];
            out.add_term(k, base * s.e[a][b] * Rational(-paw));
          }
        }
      }

      // (3) + (hbar / (2 nu_b)) sum_l sign(l) d2/du^a_l du^b_{t-1-l}
      if (key.hbar + 1 <= trunc.hbar_cap) {
        for (int l = 0; l <= t - 1; ++l) {
          int h2 = t - 1 - l;
          if (l > trunc.height_cap || h2 > trunc.height_cap) continue;
          int sign = conv.quad_sign_verbatim ? ((l + 1 + t) % 2 ? -1 : 1) : (l % 2 ? -1 : 1);
          for (int a = 0; a < ni; ++a)
            for (int b = 0; b < ni; ++b) {
              if (s.e[a][b].is_zero()) continue;
              int va = trunc.var(a, l), vb = trunc.var(b, h2);
              long deriv;
              if (va == vb) {
                deriv = static_cast<long>(key.exps[va]) * (key.exps[va] - 1);
              } else {
                deriv = static_cast<long>(key.exps[va]) * key.exps[vb];
              }
              if (deriv == 0) continue;
              PotentialPolynomial::Key k = key;
              ++k.hbar;
              --k.exps[va];
              --k.exps[vb];
              Rational factor = Rational(sign * deriv, 2) / cr.table().nu[b];
              out.add_term(k, base * s.e[a][b] * factor);
            }
        }
      }
    }
  }
  return out;
}

PotentialPolynomial exp_of_l(const ChenRuan& cr, const LOperatorData& data,
                             const PotentialPolynomial& p, const QuantConvention& conv,
                             int single_t) {
  PotentialPolynomial total = p;
  PotentialPolynomial cur = p;
  // Terminates: each application lowers total height or raises the hbar
  // power, both bounded in the truncation box.
  long cap = static_cast<long>(p.truncation().u_degree) * p.truncation().height_cap +
             p.truncation().hbar_cap + p.truncation().u_degree + 8;
  Rational kfac(1);
  for (long k = 1; k <= cap; ++k) {
    cur = apply_l_with_data(cr, data, cur, conv, single_t);
    if (cur.is_zero()) return total;
    kfac *= Rational(k);
    total += cur.scaled(Rational(1) / kfac);
  }
  fail("oracle.InternalError", "exp(L) Taylor sum did not terminate");
}

}  // namespace

PotentialPolynomial apply_l_once(const ChenRuan& cr, const PotentialPolynomial& p,
                                 const QuantConvention& conv, int single_t) {
  LOperatorData data = build_l_data(cr, p.truncation(), conv);
  return apply_l_with_data(cr, data, p, conv, single_t);
}

PotentialPolynomial apply_quantized(const ChenRuan& cr, const PotentialPolynomial& p,
                                    const QuantConvention& conv) {
  LOperatorData data = build_l_data(cr, p.truncation(), conv);
  return exp_of_l(cr, data, p, conv, 0);
}

PotentialPolynomial apply_quantized_product_form(const ChenRuan& cr,
                                                 const PotentialPolynomial& p,
                                                 const QuantConvention& conv) {
  LOperatorData data = build_l_data(cr, p.truncation(), conv);
  PotentialPolynomial cur = p;
  int tmax = 2 * p.truncation().height_cap + 1;
  for (int t = 1; t <= tmax; ++t) cur = exp_of_l(cr, data, cur, conv, t);
  return cur;
}

void audit_truncation(const PotentialTruncation& trunc, int genus, int n, int height_cap) {
  // The Taylor expansion of exp(L) reproduces the stable-graph sum termwise:
  // quadratic applications are edges, linear applications are dilaton leaves,
  // and the sources in D^BG are products of per-vertex correlators. So the
  // exact budget for the (genus, n) readout is read off the graph
  // enumeration: source u-degree = n + #dilaton + 2 #edges and source heights
  // = the per-vertex height budgets.
  require(height_cap <= trunc.height_cap, "oracle.TruncationTooTight",
          "height cap too small for the requested insertions");
  require(genus - 1 <= trunc.hbar_cap, "oracle.TruncationTooTight",
          "hbar cap too small for the requested readout");
  GraphEnumOptions opts;
  opts.num_markings = 1;
  auto graphs = enumerate_stable_graphs(genus, n, 0, opts);
  for (const auto& g : graphs) {
    int source_degree = n + static_cast<int>(g.dilaton_leaves.size()) +
                        2 * static_cast<int>(g.edges.size());
    require(source_degree <= trunc.u_degree, "oracle.TruncationTooTight",
            "u-degree " + std::to_string(trunc.u_degree) +
                " cannot hold the degree-" + std::to_string(source_degree) +
                " sources of the (" + std::to_string(genus) + "," + std::to_string(n) +
                ") readout");
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
      long budget = 3L * g.vertices[v].genus - 3 + g.valence(v);
      require(budget <= trunc.height_cap, "oracle.TruncationTooTight",
              "height cap cannot hold the vertex budgets of the (" +
                  std::to_string(genus) + "," + std::to_string(n) + ") readout");
    }
  }
}

EquivariantScalar oracle_tw_correlator(const PotentialPolynomial& log_dtw, int genus,
                                       const std::vector<std::pair<int, int>>& pattern) {
  const PotentialTruncation& trunc = log_dtw.truncation();
  PotentialPolynomial::Key key;
  key.hbar = genus - 1;
  key.exps.assign(trunc.num_vars(), 0);
  std::map<int, int> mult;
  for (const auto& [gamma, a] : pattern) {
    ++key.exps[trunc.var(gamma, a)];
    ++mult[trunc.var(gamma, a)];
  }
  EquivariantScalar out = log_dtw.coefficient(key);
  for (const auto& [var, c] : mult)
    out = out * Rational(factorial(static_cast<unsigned>(c)));
  return out;
}

ComparisonReport compare_with_graphsum(const ChenRuan& cr, const GraphSum& gs,
                                       const PotentialPolynomial& log_dtw,
                                       const std::vector<std::pair<int, int>>& gn_pairs,
                                       int height_cap) {
  ComparisonReport report;
  int ni = cr.table().num_irreps();
  for (const auto& [genus, n] : gn_pairs) {
    ++report.genus_n_pairs;
    audit_truncation(log_dtw.truncation(), genus, n, height_cap);
    // all (irrep, height) patterns with heights <= cap and total <= 3g-3+n
    std::vector<std::pair<int, int>> pattern(n);
    std::function<void(int)> rec = [&](int slot) {
      if (slot == n) {
        long total = 0;
        for (auto& [gam, a] : pattern) total += a;
        if (total > 3L * genus - 3 + n) return;
        ++report.cases;
        EquivariantScalar oracle = oracle_tw_correlator(log_dtw, genus, pattern);
        std::vector<Insertion> ins;
        for (auto& [gam, a] : pattern)
          ins.push_back({InsertionBasis::Phi, gam, a});
        EquivariantScalar graph =
            correlator(gs, genus, ins, Normalization::Twisted, true);
        if (!(graph == oracle)) {
          ++report.mismatches;
          if (report.failures.size() < 16) {
            ComparisonCase c;
            c.genus = genus;
            c.n = n;
            c.pattern = pattern;
            c.match = false;
            c.graph_value = graph.to_string();
            c.oracle_value = oracle.to_string();
            report.failures.push_back(std::move(c));
          }
        }
        return;
      }
      for (int gam = 0; gam < ni; ++gam)
        for (int a = 0; a <= height_cap; ++a) {
          pattern[slot] = {gam, a};
          rec(slot + 1);
        }
    };
    rec(0);
  }
  return report;
}

}  // namespace ogw
