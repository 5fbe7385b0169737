#pragma once

#include <optional>
#include <vector>

#include "ogw/rational.hpp"

namespace ogw {

// Stable labeled graph (Gamma, g, alpha, k): vertices carry genus and a
// marking in Rep(G); half-edges and leaves carry heights. Ordered leaves are
// pinned by automorphisms; unordered and dilaton leaves of equal (vertex,
// height) may permute. Emitted graphs satisfy, at every vertex, stability
// 2g(v)-2+val(v) > 0 and the dimension constraint
// sum of heights at v = 3g(v)-3+val(v).
struct GraphVertex {
  int genus = 0;
  int marking = 0;
};

struct GraphEdge {
  int v1 = 0, v2 = 0;
  int k1 = 0, k2 = 0;  // canonical order: (v1,k1) <= (v2,k2)
};

struct GraphLeaf {
  int vertex = 0;
  int height = 0;
};

struct StableLabeledGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;          // sorted
  std::vector<GraphLeaf> ordered_leaves; // indexed by slot
  std::vector<GraphLeaf> unordered_leaves;  // sorted
  std::vector<GraphLeaf> dilaton_leaves;    // sorted
  Integer aut_order = 1;

  int total_genus() const;
  int valence(int v) const;      // half-edges + all leaves at v
  long height_sum(int v) const;  // all heights at v
  bool is_connected() const;
};

struct GraphEnumOptions {
  int num_markings = 1;
  // Optional per-ordered-slot constraint on the marking of the carrying
  // vertex; -1 leaves the slot free.
  std::vector<int> slot_marking;
};

// Every isomorphism class exactly once, with |Aut| filled in. Deterministic
// order (sorted canonical forms).
std::vector<StableLabeledGraph> enumerate_stable_graphs(int genus, int n_ordered,
                                                        int n_unordered,
                                                        const GraphEnumOptions& opts);

// Independent |Aut| count over explicit (vertex, edge, leaf) permutations;
// test oracle for graphs with few vertices.
Integer aut_order_bruteforce(const StableLabeledGraph& g);

// Re-validation used on emission and in tests: stability, connectedness,
// genus formula, per-vertex dimension constraint.
void validate_stable_graph(const StableLabeledGraph& g, int expect_genus);

}  // namespace ogw
