#pragma once

#include <vector>

#include "ogw/psi_integrals.hpp"
#include "ogw/rmatrix.hpp"
#include "ogw/stable_graphs.hpp"

namespace ogw {

enum class Normalization { Twisted, Equivariant };  // tw vs X weights

enum class InsertionBasis { Phi, PhiBar, Class, ClassBar };

struct Insertion {
  InsertionBasis basis = InsertionBasis::PhiBar;
  int label = 0;
  int a = 0;  // descendant exponent
};

// One leaf series u_j^beta(z) = coords[beta] z^a.
struct SlotSeries {
  std::vector<EquivariantScalar> coords;
  int a = 0;
};

// Graph-sum evaluation context: R-matrix and edge kernels for a fixed
// (group, rep, truncation order).
class GraphSum {
public:
  GraphSum(const ChenRuan& cr, int order, RConvention conv = RConvention::BNext);

  const ChenRuan& chen_ruan() const { return *cr_; }
  const RMatrix& rmatrix() const { return r_; }
  int order() const { return r_.order; }

  // Weight pieces (normalization-aware); heights are validated by callers.
  EquivariantScalar leaf_weight_ordinary(int marking, int height, const SlotSeries& s,
                                         Normalization norm) const;
  EquivariantScalar leaf_weight_dilaton(int marking, int height, Normalization norm) const;
  EquivariantScalar edge_weight(int m1, int m2, int k1, int k2) const;
  EquivariantScalar vertex_weight(int genus, int marking, const std::vector<int>& heights,
                                  Normalization norm) const;

  // n-point correlator with ordered (per-slot) insertion series.
  EquivariantScalar correlator_ordered(int genus, const std::vector<SlotSeries>& slots,
                                       Normalization norm) const;
  // <u,...,u>_{g,n}/n! with n equal unordered insertions.
  EquivariantScalar correlator_unordered(int genus, const SlotSeries& series, int n,
                                         Normalization norm) const;

private:
  const ChenRuan* cr_;
  RMatrix r_;
  EdgeKernel kern_;

  EquivariantScalar graph_weight(const StableLabeledGraph& g,
                                 const std::vector<SlotSeries>& ordered_series,
                                 const SlotSeries* unordered_series,
                                 Normalization norm) const;
};

// Coordinates of an insertion over the phi basis (for tw) or the phibar basis
// (for X); class-basis insertions pick up w^{age} monomials.
std::vector<EquivariantScalar> insertion_phi_coords(const ChenRuan& cr, const Insertion& ins);
std::vector<EquivariantScalar> insertion_phibar_coords(const ChenRuan& cr, const Insertion& ins);

// <tau_{a_1}(x_1)...tau_{a_n}(x_n)> in the requested normalization. The
// result's cyclotomic parts must cancel to rationals; otherwise
// graph_sum.NonRationalCoefficient. When `ordered` is false all insertions
// must coincide and the value is the same correlator (leaves unordered, the
// n-point function itself, not divided by n!).
EquivariantScalar correlator(const GraphSum& gs, int genus, const std::vector<Insertion>& ins,
                             Normalization norm, bool ordered = true);

// Default truncation order for correlators of genus <= g with n insertions.
inline int default_order(int g, int n) { return std::max(1, 3 * g - 1 + n); }

}  // namespace ogw
