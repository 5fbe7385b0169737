#pragma once

#include <vector>

#include "ogw/character_table.hpp"
#include "ogw/psi_integrals.hpp"

namespace ogw {

// Omega^G_{g,n}(classes) = |X^G_{g,n}|/|G| where X is the set of tuples
// (alpha_1..alpha_g, beta_1..beta_g, sigma_1..sigma_n) with
// prod [alpha_i, beta_i] = prod sigma_j and sigma_j in the j-th class.
// Computed by the Frobenius character sum
//   |X| = |G|^{2g-1} sum_gamma (prod_j |K_j| chi(K_j) / d_gamma) / d_gamma^{2g-2};
// the cyclotomic parts must cancel to a nonnegative rational.
Rational omega(const FiniteGroup& g, const CharacterTable& t, int genus,
               const std::vector<int>& classes);

// Independent oracle: direct enumeration. Throws char_theory.BudgetExceeded
// when |G|^{2g+n} exceeds the budget.
Rational omega_bruteforce(const FiniteGroup& g, int genus, const std::vector<int>& classes,
                          double budget = 1e8);

// One descendant insertion for a BG correlator.
struct BgInsertion {
  // true: label indexes a conjugacy class (1_h basis); false: an irrep (phi basis).
  bool class_basis = false;
  int label = 0;
  int a = 0;  // descendant exponent
};

// <tau_{a_1}(x_1)...tau_{a_n}(x_n)>_{g,n} on BG per Jarvis-Kimura: in the phi
// basis nu^{1-g} times the psi integral when all labels agree (0 otherwise);
// mixed bases are expanded through the basis change.
Rational bg_correlator(const FiniteGroup& g, const CharacterTable& t, int genus,
                       const std::vector<BgInsertion>& insertions);

}  // namespace ogw
