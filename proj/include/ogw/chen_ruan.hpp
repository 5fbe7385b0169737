#pragma once

#include <map>
#include <shared_mutex>
#include <vector>

#include "ogw/character_table.hpp"
#include "ogw/equivariant_scalar.hpp"

namespace ogw {

// An action of G on C^r given as an ordered list of irreducible summands
// rho_1..rho_m (repeats allowed); one equivariant parameter w_i per summand.
struct RepSpec {
  std::vector<int> summands;  // irrep indices into the character table

  int num_summands() const { return static_cast<int>(summands.size()); }
};

// Eigenvalue multiplicities of a class representative acting on one summand:
// D(l) = dim of the exp(2*pi*i*l/o(h)) eigenspace, plus the age.
struct EigenProfile {
  int order = 1;                 // o(h)
  std::vector<long> mult;        // D(0..o-1), sums to dim of the summand
  Rational age;                  // sum_l (l/o) D(l)
};

// Chen-Ruan / equivariant structure context for (G, table, rho). Eigen
// profiles are memoized per (irrep, class) with shared reads and exclusive
// insertion. All query methods are const and re-entrant.
class ChenRuan {
public:
  ChenRuan(const FiniteGroup& g, const CharacterTable& t, RepSpec rep);

  const FiniteGroup& group() const { return *g_; }
  const CharacterTable& table() const { return *t_; }
  const RepSpec& rep() const { return rep_; }
  int m() const { return rep_.num_summands(); }
  int summand_dim(int i) const { return t_->dims[rep_.summands[i]]; }
  int total_dim() const;

  // Profile of the class representative on an arbitrary irrep row.
  EigenProfile eigen_profile_of_irrep(int irrep, int cls) const;
  // Profile on summand i of rho.
  const EigenProfile& profile(int i, int cls) const;

  Rational age(int i, int cls) const { return profile(i, cls).age; }
  Rational age_total(int cls) const;
  long fixed_dim(int cls) const;  // dim (C^r)^h

  // e_h = prod_i w_i^{D_i^h(0)}; e_1 = prod_i w_i^{dim rho_i}.
  EquivariantScalar euler_factor(int cls) const;
  EquivariantScalar euler_one() const { return euler_factor(0); }
  // prod_i w_i^{e * r_i / 2}, i.e. e_1^{e/2}.
  EquivariantScalar euler_one_half_pow(long e) const;
  // prod_i w_i^{age_i(h)}.
  EquivariantScalar age_monomial(int cls) const;

  // nu_gamma and nubar_gamma = nu_gamma / e_1.
  Rational nu(int irrep) const { return t_->nu[irrep]; }
  EquivariantScalar nubar(int irrep) const;

  // --- Pairings ---
  // BG: <1_h, 1_h'> = delta_{[h'],[h^{-1}]} / |C(h)|.
  Rational pairing_bg_class(int c1, int c2) const;
  // BG: <phi_a, phi_b> = nu_a delta.
  Rational pairing_bg_phi(int a, int b) const;
  // Equivariant X: <1_h, 1_h'> = delta / (|C(h)| e_h).
  EquivariantScalar pairing_x_class(int c1, int c2) const;
  // Non-equivariant X pairing (degenerate case, exposed for tests):
  // delta_{[h'],[h^{-1}]} delta_{0, dim X_h} / |C(h)|.
  Rational pairing_x_class_nonequivariant(int c1, int c2) const;
  // X: <1bar_h, 1bar_h'> = delta / (|C(h)| e_1).
  EquivariantScalar pairing_x_classbar(int c1, int c2) const;
  // X: <phibar_a, phibar_b> = nubar_a delta.
  EquivariantScalar pairing_x_phibar(int a, int b) const;

  // --- Cup products (coefficients of the result on the same basis) ---
  // BG: 1_h * 1_h' = sum |C(gg')| 1_{gg'} / |G|.
  std::vector<Rational> cup_bg_class(int c1, int c2) const;
  std::vector<Rational> cup_bg_phi(int a, int b) const;  // delta diag idempotents
  // X: with the w^{age(g)+age(g')-age(gg')} dressing.
  std::vector<EquivariantScalar> cup_x_class(int c1, int c2) const;
  // X: 1bar * 1bar has the BG structure constants.
  std::vector<Rational> cup_x_classbar(int c1, int c2) const;
  std::vector<Rational> cup_x_phibar(int a, int b) const;  // delta diag idempotents

private:
  const FiniteGroup* g_;
  const CharacterTable* t_;
  RepSpec rep_;
  mutable std::map<std::pair<int, int>, EigenProfile> profile_memo_;
  mutable std::shared_mutex memo_mu_;
};

}  // namespace ogw
