#include "ogw/rmatrix.hpp"

namespace ogw {

Rational b_profile(const ChenRuan& cr, int summand, int cls, unsigned t) {
  const EigenProfile& prof = cr.profile(summand, cls);
  Rational out(0);
  for (int l = 0; l < prof.order; ++l) {
    if (prof.mult[l] == 0) continue;
    out += bernoulli_poly(t, Rational(l, prof.order)) * Rational(prof.mult[l]);
  }
  return out;
}

std::vector<Rational> a_action_on_classes(const ChenRuan& cr, int summand, unsigned t) {
  std::vector<Rational> out;
  for (int c = 0; c < cr.group().num_classes(); ++c) out.push_back(b_profile(cr, summand, c, t));
  return out;
}

std::vector<std::vector<Cyclotomic>> e_matrix(const ChenRuan& cr, int summand, unsigned t) {
  const FiniteGroup& g = cr.group();
  const CharacterTable& tab = cr.table();
  int ni = tab.num_irreps();
  std::vector<Rational> b = a_action_on_classes(cr, summand, t);
  std::vector<std::vector<Cyclotomic>> e(ni, std::vector<Cyclotomic>(ni));
  for (int a = 0; a < ni; ++a)
    for (int bcol = 0; bcol < ni; ++bcol) {
      Cyclotomic s;
      for (int c = 0; c < g.num_classes(); ++c) {
        if (b[c] == 0) continue;
        s += tab.value(a, c) * tab.value_at_inverse(bcol, c) *
             (b[c] * Rational(g.class_size(c)));
      }
      e[a][bcol] = s * Rational(tab.dims[bcol], static_cast<long>(g.order) * tab.dims[a]);
      if (t % 2 == 0)
        require(e[a][bcol].is_rational() || e[a][bcol] == e[a][bcol].conj(),
                "rmatrix.NonRealEntry", "even-t E matrix entry not real");
    }
  return e;
}

EquivariantScalar RMatrix::neg_coeff(int a, int b, int k) const {
  const EquivariantScalar& c = at(a, b).coeff(k);
  return (k % 2) ? -c : c;
}

RMatrix build_rmatrix(const ChenRuan& cr, int order, RConvention convention) {
  const FiniteGroup& g = cr.group();
  const CharacterTable& tab = cr.table();
  int ni = tab.num_irreps();
  int m = cr.m();
  require(order >= 1, "rmatrix.InvalidOrder", "truncation order must be >= 1");

  RMatrix r;
  r.size = ni;
  r.order = order;
  r.m = m;
  r.entries.assign(static_cast<size_t>(ni) * ni, TruncatedSeries(1, order, m));

  // Per class: exp of the Bernoulli exponent series.
  std::vector<TruncatedSeries> exp_by_class;
  for (int c = 0; c < g.num_classes(); ++c) {
    TruncatedSeries f(1, order, m);
    for (int t = 1; t <= order; ++t) {
      EquivariantScalar coeff(m);
      unsigned bt = convention == RConvention::BNext ? static_cast<unsigned>(t + 1)
                                                     : static_cast<unsigned>(t);
      Rational pref = Rational((t % 2) ? -1 : 1, static_cast<long>(t) * (t + 1));
      for (int i = 0; i < m; ++i) {
        Rational bval = b_profile(cr, i, c, bt);
        if (bval == 0) continue;
        coeff += EquivariantScalar::variable_power(m, i, Rational(-t)) * (pref * bval);
      }
      f.set_coeff(t, coeff);
    }
    exp_by_class.push_back(series_exp(f));
  }

  for (int a = 0; a < ni; ++a)
    for (int b = 0; b < ni; ++b) {
      TruncatedSeries acc(1, order, m);
      for (int c = 0; c < g.num_classes(); ++c) {
        Cyclotomic chi = tab.value(a, c) * tab.value_at_inverse(b, c) *
                         Rational(g.class_size(c), g.order);
        if (chi.is_zero()) continue;
        acc += exp_by_class[c] * EquivariantScalar::constant(m, chi);
      }
      r.entries[static_cast<size_t>(a) * ni + b] = std::move(acc);
    }

  // R(0) = Id.
  for (int a = 0; a < ni; ++a)
    for (int b = 0; b < ni; ++b) {
      EquivariantScalar expect =
          a == b ? EquivariantScalar::constant(m, Rational(1)) : EquivariantScalar(m);
      require(r.at(a, b).coeff(0) == expect, "rmatrix.SymplecticCheckFailed",
              "R(0) is not the identity");
    }
  check_symplectic(r);
  return r;
}

void check_symplectic(const RMatrix& r) {
  // sum_g R(-z)^g_a R(z)^g_b = delta_ab through z^order.
  for (int a = 0; a < r.size; ++a)
    for (int b = 0; b < r.size; ++b)
      for (int k = 0; k <= r.order; ++k) {
        EquivariantScalar acc(r.m);
        for (int g = 0; g < r.size; ++g)
          for (int j = 0; j <= k; ++j) acc += r.neg_coeff(g, a, j) * r.at(g, b).coeff(k - j);
        EquivariantScalar expect = (a == b && k == 0)
                                       ? EquivariantScalar::constant(r.m, Rational(1))
                                       : EquivariantScalar(r.m);
        require(acc == expect, "rmatrix.SymplecticCheckFailed",
                "symplectic identity fails at entry (" + std::to_string(a) + "," +
                    std::to_string(b) + "), z^" + std::to_string(k));
      }
}

EdgeKernel build_edge_kernel(const RMatrix& r) {
  EdgeKernel kern;
  kern.size = r.size;
  kern.order = r.order;
  kern.kernels.reserve(static_cast<size_t>(r.size) * r.size);
  for (int a = 0; a < r.size; ++a)
    for (int b = 0; b < r.size; ++b) {
      TruncatedSeries num(2, r.order, r.m);
      if (a == b)
        num.set_coeff(0, 0, EquivariantScalar::constant(r.m, Rational(1)));
      for (int g = 0; g < r.size; ++g) {
        TruncatedSeries prod = outer_product(r.at(g, a).negated_variable(),
                                             r.at(g, b).negated_variable());
        num = num - prod;
      }
      kern.kernels.push_back(divide_by_z_plus_w(num));
    }
  return kern;
}

}  // namespace ogw
