#pragma once

#include <string>
#include <vector>

#include "ogw/graph_sum.hpp"
#include "ogw/potential.hpp"
#include "ogw/rmatrix.hpp"

namespace ogw {

// Conventions of the quantized operator, each wired so the readings of the
// source displays stay testable. Shipped defaults: BNext indexing, the
// dilaton-shift linear term at height t+1, and the verbatim (-1)^{l+1+t}
// quadratic sign pattern.
struct QuantConvention {
  RConvention r = RConvention::BNext;
  bool dilaton_linear_next = true;  // false: d/du_t as displayed
  bool quad_sign_verbatim = true;   // false: (-1)^l pattern
};

// exp(L) P where L is the quantized operator
//   sum_i sum_{t>=1} ((-1)^t/(t(t+1))) w_i^{-t} sum_{a,b} (E^i_{t+1})^a_b
//     [ d/du^a_{t+1} - sum_l u^b_l d/du^a_{l+t}
//       + (hbar/(2 nu_b)) sum_{l=0}^{t-1} (-1)^{l+1+t} d2/du^a_l du^b_{t-1-l} ].
// The Taylor sum terminates: every summand lowers total height or raises the
// hbar power, both bounded in the truncation.
PotentialPolynomial apply_quantized(const ChenRuan& cr, const PotentialPolynomial& p,
                                    const QuantConvention& conv = {});

// Product form prod_t exp(L_t) (ascending t); differs from the summed form in
// general and exists for the operator-ordering regression test.
PotentialPolynomial apply_quantized_product_form(const ChenRuan& cr,
                                                 const PotentialPolynomial& p,
                                                 const QuantConvention& conv = {});

// One application of L (or of the single-t slice when t > 0).
PotentialPolynomial apply_l_once(const ChenRuan& cr, const PotentialPolynomial& p,
                                 const QuantConvention& conv, int single_t = 0);

// Audit that the requested readout coefficients cannot depend on truncated
// input; throws oracle.TruncationTooTight.
void audit_truncation(const PotentialTruncation& trunc, int genus, int n, int height_cap);

// log D^tw readout: the correlator <tau_{a_1}(phi_{g_1})...>^tw equals the
// coefficient of hbar^{g-1} prod u^{g_j}_{a_j} times the product of
// multiplicities factorials.
EquivariantScalar oracle_tw_correlator(const PotentialPolynomial& log_dtw, int genus,
                                       const std::vector<std::pair<int, int>>& pattern);

struct ComparisonCase {
  int genus = 0;
  int n = 0;
  std::vector<std::pair<int, int>> pattern;  // (irrep, height) per slot
  bool match = false;
  std::string graph_value;
  std::string oracle_value;
};

struct ComparisonReport {
  int genus_n_pairs = 0;
  long cases = 0;
  long mismatches = 0;
  std::vector<ComparisonCase> failures;  // first few mismatches
};

// Full graph-sum vs quantization comparison for the (g,n) pairs, all irrep
// patterns with heights <= height_cap (and total height within dimension
// reach). Throws on nothing; the caller decides how to treat mismatches.
ComparisonReport compare_with_graphsum(const ChenRuan& cr, const GraphSum& gs,
                                       const PotentialPolynomial& log_dtw,
                                       const std::vector<std::pair<int, int>>& gn_pairs,
                                       int height_cap);

}  // namespace ogw
