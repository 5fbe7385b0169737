#include "ogw/bg_correlators.hpp"

#include <cmath>
#include <numeric>

namespace ogw {

Rational omega(const FiniteGroup& g, const CharacterTable& t, int genus,
               const std::vector<int>& classes) {
  require(genus >= 0, "char_theory.InvalidInput", "negative genus");
  for (int c : classes)
    require(c >= 0 && c < g.num_classes(), "char_theory.InvalidInput", "bad class index");

  Cyclotomic total;
  for (int a = 0; a < t.num_irreps(); ++a) {
    Cyclotomic term(Rational(1));
    for (int c : classes)
      term *= t.value(a, c) * Rational(t.class_sizes[c], t.dims[a]);
    term = term * rational_pow(Rational(t.dims[a]), 2L - 2L * genus);
    total += term;
  }
  // |X| = |G|^{2g-1} * total; Omega = |X| / |G|.
  Rational count_scale = rational_pow(Rational(g.order), 2L * genus - 1);
  require(total.is_rational(), "char_theory.NonRationalResult",
          "Frobenius sum failed to cancel to a rational");
  Rational out = count_scale * total.rational_part() / Rational(g.order);
  require(out >= 0, "char_theory.NonRationalResult", "negative Frobenius count");
  return out;
}

Rational omega_bruteforce(const FiniteGroup& g, int genus, const std::vector<int>& classes,
                          double budget) {
  int n = static_cast<int>(classes.size());
  double work = std::pow(static_cast<double>(g.order), 2.0 * genus + n);
  require(work <= budget, "char_theory.BudgetExceeded",
          "brute-force enumeration exceeds budget");

  // Direct enumeration: every (alpha_1..alpha_g, beta_1..beta_g) tuple and
  // every sigma tuple drawn from the requested classes.
  Integer matches = 0;
  std::vector<int> handle(2 * genus, 0);
  std::vector<int> sigma_pick(n, 0);
  auto sigma_product = [&]() {
    int z = 0;
    for (int j = 0; j < n; ++j) z = g.mul(z, g.classes[classes[j]][sigma_pick[j]]);
    return z;
  };
  auto commutator_product = [&]() {
    int z = 0;
    for (int i = 0; i < genus; ++i) {
      int a = handle[2 * i], b = handle[2 * i + 1];
      z = g.mul(z, g.mul(g.mul(a, b), g.mul(g.invert(a), g.invert(b))));
    }
    return z;
  };
  bool more_handles = true;
  while (more_handles) {
    int lhs = commutator_product();
    bool more_sigmas = true;
    while (more_sigmas) {
      if (sigma_product() == lhs) ++matches;
      more_sigmas = false;
      for (int j = 0; j < n; ++j) {
        if (++sigma_pick[j] < static_cast<int>(g.classes[classes[j]].size())) {
          more_sigmas = true;
          break;
        }
        sigma_pick[j] = 0;
      }
    }
    more_handles = false;
    for (int i = 0; i < 2 * genus; ++i) {
      if (++handle[i] < g.order) {
        more_handles = true;
        break;
      }
      handle[i] = 0;
    }
  }
  Rational out = Rational(matches) / Rational(g.order);
  out.canonicalize();
  return out;
}

Rational bg_correlator(const FiniteGroup& g, const CharacterTable& t, int genus,
                       const std::vector<BgInsertion>& insertions) {
  int n = static_cast<int>(insertions.size());
  require(2 * genus - 2 + n > 0, "psi_intersection.UnstableInput",
          "unstable correlator requested");
  long total_a = 0;
  for (const auto& ins : insertions) total_a += ins.a;
  if (total_a != 3L * genus - 3 + n) return Rational(0);

  std::vector<int> exps;
  for (const auto& ins : insertions) exps.push_back(ins.a);
  Rational psi = psi_integral(genus, exps);

  bool any_class = false, any_phi = false;
  for (const auto& ins : insertions) (ins.class_basis ? any_class : any_phi) = true;

  if (any_class && !any_phi) {
    std::vector<int> classes;
    for (const auto& ins : insertions) classes.push_back(ins.label);
    return omega(g, t, genus, classes) * psi;
  }
  if (any_phi && !any_class) {
    for (const auto& ins : insertions)
      require(ins.label >= 0 && ins.label < t.num_irreps(), "char_theory.InvalidInput",
              "bad irrep index");
    for (int j = 1; j < n; ++j)
      if (insertions[j].label != insertions[0].label) return Rational(0);
    return rational_pow(t.nu[insertions[0].label], 1L - genus) * psi;
  }

  // Mixed bases: expand the class-basis insertions over phi and use
  // multilinearity. 1_h = |[h]| sum_gamma (chi_gamma(h)/d_gamma) phi_gamma,
  // and only the all-equal phi pattern survives.
  Cyclotomic acc;
  for (int gamma = 0; gamma < t.num_irreps(); ++gamma) {
    Cyclotomic term(Rational(1));
    bool zero = false;
    for (const auto& ins : insertions) {
      if (ins.class_basis) {
        term *= t.value(gamma, ins.label) * Rational(t.class_sizes[ins.label], t.dims[gamma]);
      } else if (ins.label != gamma) {
        zero = true;
        break;
      }
    }
    if (zero) continue;
    acc += term * rational_pow(t.nu[gamma], 1L - genus);
  }
  require(acc.is_rational(), "char_theory.NonRationalResult",
          "mixed-basis correlator failed to cancel to a rational");
  return acc.rational_part() * psi;
}

}  // namespace ogw
