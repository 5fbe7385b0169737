#pragma once

#include <vector>

#include "ogw/bernoulli.hpp"
#include "ogw/chen_ruan.hpp"
#include "ogw/truncated_series.hpp"

namespace ogw {

// Indexing of the quantization exponent: BNext places B_{t+1}^{rho_i}(h) at
// z^t (the reading under which the operator is infinitesimally symplectic and
// the trivial group reproduces the classical Bernoulli pattern); BSame places
// B_t there. Both are wired so the discrepancy between the two source
// displays stays testable; BNext is the shipped convention.
enum class RConvention { BNext, BSame };

// B_t^{rho_i}(h) = sum_l B_t(l/o(h)) D_{rho_i}^h(l).
Rational b_profile(const ChenRuan& cr, int summand, int cls, unsigned t);

// Diagonal action on the class basis: 1_h -> B_t^{rho_i}(h) 1_h.
std::vector<Rational> a_action_on_classes(const ChenRuan& cr, int summand, unsigned t);

// The same operator on the canonical basis phi: A(phi_b) = sum_a E^a_b phi_a,
// E^a_b = (|V_b| / (|G| |V_a|)) sum_h chi_a(h) chi_b(h^{-1}) B_t^{rho_i}(h).
// Entries are real for even t; for all t, conjugating an entry equals
// resumming over h^{-1} (asserted).
std::vector<std::vector<Cyclotomic>> e_matrix(const ChenRuan& cr, int summand, unsigned t);

// R(z) in the normalized canonical basis phi_gamma / sqrt(nu_gamma):
//   R^a_b = (1/|G|) sum_h chi_a(h) chi_b(h^{-1})
//           exp(sum_i sum_{t>=1} ((-1)^t/(t(t+1))) B_{t+1}^{rho_i}(h) (z/w_i)^t).
// Satisfies R(0) = Id and sum_g R(-z)^g_a R(z)^g_b = delta_ab through z^D;
// construction fails loudly otherwise.
struct RMatrix {
  int size = 0;   // |Rep(G)|
  int order = 0;  // truncation D
  int m = 0;      // number of w variables
  std::vector<TruncatedSeries> entries;  // row-major, entries[a*size+b] = R^a_b(z)

  const TruncatedSeries& at(int a, int b) const { return entries[a * size + b]; }
  // Coefficient [z^k] of R(-z)^a_b.
  EquivariantScalar neg_coeff(int a, int b, int k) const;
};

RMatrix build_rmatrix(const ChenRuan& cr, int order,
                      RConvention convention = RConvention::BNext);

// Verifies sum_g R(-z)^g_a R(z)^g_b == delta through z^order; throws
// rmatrix.SymplecticCheckFailed on violation.
void check_symplectic(const RMatrix& r);

// Edge kernels: for each (a,b) the two-variable series
//   (delta_ab - sum_g R^g_a(-z) R^g_b(-w)) / (z + w),
// divided exactly; the divisibility is the symplectic condition.
struct EdgeKernel {
  int size = 0;
  int order = 0;
  std::vector<TruncatedSeries> kernels;  // row-major two-variable series

  const TruncatedSeries& at(int a, int b) const { return kernels[a * size + b]; }
};

EdgeKernel build_edge_kernel(const RMatrix& r);

}  // namespace ogw
