#include "ogw/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ogw {

namespace {

// Shared post-construction pass: identity/inverse discovery, conjugacy
// structure, orders, exponent. Associativity is scanned in full for small
// tables and sampled above that.
void finalize(FiniteGroup& g) {
  int n = g.order;
  require(n >= 1, "group_core.InvalidTable", "empty group");
  require(static_cast<int>(g.mult.size()) == n, "group_core.InvalidTable",
          "multiplication table has wrong shape");
  for (const auto& row : g.mult) {
    require(static_cast<int>(row.size()) == n, "group_core.InvalidTable",
            "multiplication table has wrong shape");
    for (int v : row)
      require(v >= 0 && v < n, "group_core.InvalidTable", "table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    require(g.mult[0][a] == a && g.mult[a][0] == a, "group_core.InvalidTable",
            "element 0 is not a two-sided identity");

  // Latin square check (each row/column a permutation).
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int b = 0; b < n; ++b) {
      require(!seen_row[g.mult[a][b]], "group_core.InvalidTable", "row is not a permutation");
      require(!seen_col[g.mult[b][a]], "group_core.InvalidTable", "column is not a permutation");
      seen_row[g.mult[a][b]] = 1;
      seen_col[g.mult[b][a]] = 1;
    }
  }

  if (n <= 300) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          require(g.mult[g.mult[a][b]][c] == g.mult[a][g.mult[b][c]],
                  "group_core.InvalidTable", "multiplication table is not associative");
  } else {
    unsigned long long x = 88172645463325252ull;
    auto rnd = [&]() {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      return static_cast<int>(x % n);
    };
    for (int trial = 0; trial < 20000; ++trial) {
      int a = rnd(), b = rnd(), c = rnd();
      require(g.mult[g.mult[a][b]][c] == g.mult[a][g.mult[b][c]], "group_core.InvalidTable",
              "multiplication table is not associative");
    }
  }

  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mult[a][b] == 0) {
        require(g.mult[b][a] == 0, "group_core.InvalidTable", "inverse is not two-sided");
        g.inv[a] = b;
      }
  for (int a = 0; a < n; ++a)
    require(g.inv[a] >= 0, "group_core.InvalidTable", "missing inverse");

  // Conjugacy classes, ordered by smallest member.
  g.class_of.assign(n, -1);
  g.classes.clear();
  g.class_rep.clear();
  for (int h = 0; h < n; ++h) {
    if (g.class_of[h] >= 0) continue;
    int ci = static_cast<int>(g.classes.size());
    std::vector<int> cls;
    std::vector<char> in_class(n, 0);
    for (int x = 0; x < n; ++x) {
      int y = g.mult[g.mult[x][h]][g.inv[x]];
      if (!in_class[y]) {
        in_class[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    for (int y : cls) g.class_of[y] = ci;
    g.class_rep.push_back(cls.front());
    g.classes.push_back(std::move(cls));
  }

  g.centralizer_order.clear();
  for (const auto& cls : g.classes) {
    require(n % cls.size() == 0, "group_core.InvalidTable", "class size does not divide order");
    g.centralizer_order.push_back(n / static_cast<long>(cls.size()));
  }

  g.element_order.assign(n, 0);
  long exponent = 1;
  for (int a = 0; a < n; ++a) {
    int o = 1, x = a;
    while (x != 0) {
      x = g.mult[x][a];
      ++o;
    }
    g.element_order[a] = o;
    exponent = std::lcm(exponent, static_cast<long>(o));
  }
  g.exponent = static_cast<int>(exponent);

  g.inverse_class.clear();
  for (int c = 0; c < g.num_classes(); ++c)
    g.inverse_class.push_back(g.class_of[g.inv[g.class_rep[c]]]);
}

}  // namespace

int FiniteGroup::power(int h, long k) const {
  require(h >= 0 && h < order, "group_core.InvalidElement", "element index out of range");
  int base = h;
  if (k < 0) {
    base = inv[h];
    k = -k;
  }
  int out = 0;
  unsigned long n = static_cast<unsigned long>(k);
  while (n) {
    if (n & 1) out = mult[out][base];
    base = mult[base][base];
    n >>= 1;
  }
  return out;
}

FiniteGroup FiniteGroup::from_mult_table(std::vector<std::vector<int>> table) {
  FiniteGroup g;
  g.order = static_cast<int>(table.size());
  g.mult = std::move(table);
  finalize(g);
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators,
                                           int cap) {
  require(!generators.empty(), "group_core.InvalidPermutation", "no generators given");
  size_t deg = generators[0].size();
  require(deg > 0, "group_core.InvalidPermutation", "empty permutation");
  for (const auto& p : generators) {
    require(p.size() == deg, "group_core.InvalidPermutation",
            "generators permute different sets");
    std::vector<char> seen(deg, 0);
    for (int v : p) {
      require(v >= 0 && v < static_cast<int>(deg) && !seen[v], "group_core.InvalidPermutation",
              "not a bijection");
      seen[v] = 1;
    }
  }

  std::vector<int> identity(deg);
  std::iota(identity.begin(), identity.end(), 0);
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    // (a o b)(x) = a(b(x))
    std::vector<int> out(deg);
    for (size_t x = 0; x < deg; ++x) out[x] = a[b[x]];
    return out;
  };

  // Breadth-first closure from the identity, generators applied in input
  // order: the discovery order is the canonical element order.
  std::vector<std::vector<int>> elems{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : generators) {
      auto next = compose(elems[head], gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(next);
        require(static_cast<int>(elems.size()) <= cap, "group_core.ClosureExceedsCap",
                "generated group exceeds cap " + std::to_string(cap));
      }
    }
  }

  int n = static_cast<int>(elems.size());
  FiniteGroup g;
  g.order = n;
  g.mult.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mult[a][b] = index.at(compose(elems[a], elems[b]));
  finalize(g);
  return g;
}

FiniteGroup FiniteGroup::builtin(const std::string& family, int n, int cap) {
  auto range_check = [&](long order) {
    require(n >= 1, "group_core.ParameterOutOfRange", family + " parameter must be >= 1");
    require(order <= cap, "group_core.ParameterOutOfRange",
            family + "(" + std::to_string(n) + ") has order " + std::to_string(order) +
                " above cap " + std::to_string(cap));
  };

  if (family == "cyclic") {
    range_check(n);
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_mult_table(std::move(t));
  }

  if (family == "dihedral") {
    range_check(2L * n);
    // indices: r^i -> i, s r^i -> n + i, with s r s = r^{-1}
    int m = 2 * n;
    auto enc = [&](int flip, int rot) { return flip * n + ((rot % n) + n) % n; };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int f1 = 0; f1 < 2; ++f1)
      for (int r1 = 0; r1 < n; ++r1)
        for (int f2 = 0; f2 < 2; ++f2)
          for (int r2 = 0; r2 < n; ++r2) {
            // (s^{f1} r^{r1})(s^{f2} r^{r2}) = s^{f1+f2} r^{r2 + (-1)^{f2} r1}
            int rot = f2 ? r2 - r1 : r2 + r1;
            t[enc(f1, r1)][enc(f2, r2)] = enc((f1 + f2) % 2, rot);
          }
    return from_mult_table(std::move(t));
  }

  if (family == "binary_dihedral" || family == "quaternion") {
    range_check(4L * n);
    // a^{2n} = 1, b^2 = a^n, b a b^{-1} = a^{-1}; elements a^r then b a^r.
    int two_n = 2 * n, m = 4 * n;
    auto enc = [&](int flip, int rot) { return flip * two_n + ((rot % two_n) + two_n) % two_n; };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int f1 = 0; f1 < 2; ++f1)
      for (int r1 = 0; r1 < two_n; ++r1)
        for (int f2 = 0; f2 < 2; ++f2)
          for (int r2 = 0; r2 < two_n; ++r2) {
            // (b^{f1} a^{r1})(b^{f2} a^{r2}): move a^{r1} past b^{f2};
            // b^2 = a^n when both flips are set.
            int rot = f2 ? r2 - r1 : r2 + r1;
            int flip = (f1 + f2) % 2;
            if (f1 && f2) rot += n;
            t[enc(f1, r1)][enc(f2, r2)] = enc(flip, rot);
          }
    return from_mult_table(std::move(t));
  }

  if (family == "symmetric") {
    long order = 1;
    for (int k = 2; k <= n; ++k) {
      order *= k;
      if (order > cap) break;
    }
    range_check(order);
    // Elements are the n! permutations in lexicographic order (identity first).
    std::vector<std::vector<int>> elems;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    int m = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        std::vector<int> c(n);
        for (int x = 0; x < n; ++x) c[x] = elems[a][elems[b][x]];
        t[a][b] = index.at(c);
      }
    return from_mult_table(std::move(t));
  }

  fail("group_core.UnknownFamily", "unknown builtin family '" + family + "'");
}

}  // namespace ogw
