#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ogw/character_table.hpp"
#include "ogw/equivariant_scalar.hpp"
#include "ogw/psi_integrals.hpp"

namespace ogw {

// Truncation box for descendant potentials: u-monomials of total degree <= u_degree
// in the variables u_a^gamma (heights a <= height_cap), hbar powers <= hbar_cap
// (negative powers arise from the genus-0 part and are bounded by the u-degree
// truncation).
struct PotentialTruncation {
  int num_irreps = 1;
  int height_cap = 4;
  int u_degree = 6;
  int hbar_cap = 2;

  int num_vars() const { return num_irreps * (height_cap + 1); }
  int var(int irrep, int height) const { return irrep * (height_cap + 1) + height; }
};

// Polynomial in {u_a^gamma} and hbar with EquivariantScalar coefficients,
// truncated to the box above. Canonical sorted term order.
class PotentialPolynomial {
public:
  struct Key {
    int hbar = 0;
    std::vector<std::uint8_t> exps;
    auto operator<=>(const Key&) const = default;
  };

  PotentialPolynomial(PotentialTruncation trunc, int scalar_vars)
      : trunc_(trunc), scalar_vars_(scalar_vars) {}

  const PotentialTruncation& truncation() const { return trunc_; }
  int scalar_vars() const { return scalar_vars_; }
  const std::map<Key, EquivariantScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // Adds c * hbar^h * prod u^exps, silently truncating out-of-box terms.
  void add_term(const Key& key, const EquivariantScalar& c);
  EquivariantScalar coefficient(const Key& key) const;

  PotentialPolynomial operator+(const PotentialPolynomial& b) const;
  PotentialPolynomial operator-(const PotentialPolynomial& b) const;
  PotentialPolynomial operator*(const PotentialPolynomial& b) const;
  PotentialPolynomial scaled(const Rational& q) const;
  PotentialPolynomial& operator+=(const PotentialPolynomial& b);

  friend bool operator==(const PotentialPolynomial& a, const PotentialPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  static int total_degree(const Key& key);

private:
  PotentialTruncation trunc_;
  int scalar_vars_;
  std::map<Key, EquivariantScalar> terms_;
};

// exp of a potential with no constant term (u-free hbar^0 part), truncated.
PotentialPolynomial potential_exp(const PotentialPolynomial& p);
// log of 1 + X where the argument has constant term 1.
PotentialPolynomial potential_log(const PotentialPolynomial& p);

// log D^BG = sum_g hbar^{g-1} F_g within the truncation; F_g assembled from
// the Jarvis-Kimura correlators (per irrep, multiset-collected).
PotentialPolynomial bg_log_potential(const CharacterTable& table,
                                     const PotentialTruncation& trunc, int scalar_vars);
// D^BG = exp of the above.
PotentialPolynomial bg_potential(const CharacterTable& table, const PotentialTruncation& trunc,
                                 int scalar_vars);

}  // namespace ogw
