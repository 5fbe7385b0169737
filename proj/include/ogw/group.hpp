#pragma once

#include <string>
#include <vector>

#include "ogw/error.hpp"

namespace ogw {

// Elements are indices 0..order-1 into the canonical element list; 0 is the
// identity. Immutable after construction.
struct FiniteGroup {
  int order = 1;
  std::vector<std::vector<int>> mult;  // mult[a][b] = a*b
  std::vector<int> inv;

  std::vector<std::vector<int>> classes;  // ordered by smallest element; classes[0] = {0}
  std::vector<int> class_of;              // element -> class index
  std::vector<int> class_rep;             // class -> smallest element
  std::vector<int> inverse_class;         // class of rep^{-1}
  std::vector<long> centralizer_order;    // per class
  std::vector<int> element_order;         // per element
  int exponent = 1;                       // lcm of element orders

  int mul(int a, int b) const { return mult[a][b]; }
  int invert(int a) const { return inv[a]; }
  int power(int h, long k) const;
  int conjugacy_class_of(int h) const { return class_of[h]; }
  long centralizer_order_of(int h) const { return centralizer_order[class_of[h]]; }
  int num_classes() const { return static_cast<int>(classes.size()); }
  long class_size(int c) const { return static_cast<long>(classes[c].size()); }

  static constexpr int kDefaultCap = 2000;

  static FiniteGroup from_mult_table(std::vector<std::vector<int>> table);
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators,
                                       int cap = kDefaultCap);
  // family in {cyclic, dihedral, binary_dihedral, symmetric, quaternion}
  static FiniteGroup builtin(const std::string& family, int n, int cap = kDefaultCap);
};

}  // namespace ogw
