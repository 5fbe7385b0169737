#pragma once

#include <vector>

#include "ogw/cyclotomic.hpp"
#include "ogw/group.hpp"

namespace ogw {

// Irreducible character table over Q(zeta_N), N = exponent(G). Rows are in a
// deterministic order: ascending dimension, then descending value sequence
// (so the trivial character leads its dimension block). Immutable after
// validation.
struct CharacterTable {
  int group_order = 1;
  int exponent = 1;  // ambient cyclotomic order N
  std::vector<long> class_sizes;
  std::vector<int> inverse_class;
  std::vector<int> dims;                        // |V_gamma|
  std::vector<std::vector<Cyclotomic>> values;  // [irrep][class]
  std::vector<Rational> nu;                     // (|V_gamma|/|G|)^2

  int num_irreps() const { return static_cast<int>(dims.size()); }
  int num_classes() const { return static_cast<int>(class_sizes.size()); }
  const Cyclotomic& value(int irrep, int cls) const { return values[irrep][cls]; }
  // chi_gamma(h^{-1}) for h in class cls.
  const Cyclotomic& value_at_inverse(int irrep, int cls) const {
    return values[irrep][inverse_class[cls]];
  }
};

// Dixon-Burnside: class-algebra eigenvectors over a prime field lifted to
// Q(zeta_N). Throws char_theory.TableComputationFailed on internal failure.
CharacterTable character_table(const FiniteGroup& g);

// Exact verification of both orthogonality relations and sum of squares;
// throws char_theory.OrthogonalityFailed on violation.
void validate_character_table(const FiniteGroup& g, const CharacterTable& t);

// Assemble (and validate) a table from externally supplied rows.
CharacterTable character_table_from_parts(const FiniteGroup& g, std::vector<int> dims,
                                          std::vector<std::vector<Cyclotomic>> values);

// Coordinates of sum_h x_h 1_h in the phi basis: phi_gamma coefficient is
// sum over classes of |[h]| chi_gamma(h) x_h / |V_gamma|.
std::vector<Cyclotomic> class_to_phi_coords(const FiniteGroup& g, const CharacterTable& t,
                                            const std::vector<Cyclotomic>& class_coords);
// Inverse transform: 1_h coefficient of sum_gamma y_gamma phi_gamma is
// (|V_gamma|/|G|) sum_gamma chi_gamma(h^{-1}) y_gamma.
std::vector<Cyclotomic> phi_to_class_coords(const FiniteGroup& g, const CharacterTable& t,
                                            const std::vector<Cyclotomic>& phi_coords);

}  // namespace ogw
