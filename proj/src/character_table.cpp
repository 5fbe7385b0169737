#include "ogw/character_table.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

namespace ogw {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b % p) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(u128(a) * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 out = 1 % p;
    a %= p;
    while (e) {
      if (e & 1) out = mul(out, a);
      a = mul(a, a);
      e >>= 1;
    }
    return out;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

u64 primitive_root(const Fp& f) {
  auto factors = prime_factors(f.p - 1);
  for (u64 g = 2; g < f.p; ++g) {
    bool ok = true;
    for (u64 q : factors)
      if (f.pow(g, (f.p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail("char_theory.TableComputationFailed", "no primitive root found");
}

using Mat = std::vector<std::vector<u64>>;
using Vec = std::vector<u64>;

Vec mat_vec(const Fp& f, const Mat& m, const Vec& v) {
  size_t n = m.size();
  Vec out(n, 0);
  for (size_t i = 0; i < n; ++i) {
    u128 acc = 0;
    for (size_t j = 0; j < n; ++j) acc += u128(m[i][j]) * v[j] % f.p;
    out[i] = static_cast<u64>(acc % f.p);
  }
  return out;
}

// Nullspace basis of a square matrix (Gauss-Jordan).
std::vector<Vec> nullspace(const Fp& f, Mat a) {
  size_t n = a.size();
  std::vector<int> pivot_col_of_row(n, -1);
  size_t row = 0;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t sel = row;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(a[sel], a[row]);
    u64 inv = f.inv(a[row][col]);
    for (size_t j = 0; j < n; ++j) a[row][j] = f.mul(a[row][j], inv);
    for (size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      u64 factor = a[i][col];
      for (size_t j = 0; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[row][j]));
    }
    pivot_col_of_row[row] = static_cast<int>(col);
    ++row;
  }
  std::vector<char> is_pivot(n, 0);
  for (size_t r = 0; r < row; ++r) is_pivot[pivot_col_of_row[r]] = 1;
  std::vector<Vec> basis;
  for (size_t col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    Vec v(n, 0);
    v[col] = 1;
    for (size_t r = 0; r < row; ++r) v[pivot_col_of_row[r]] = f.sub(0, a[r][col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Minimal polynomial of (theta, v) via Krylov + incremental elimination.
// Returns monic coefficients c_0..c_d (degree d).
Vec krylov_min_poly(const Fp& f, const Mat& theta, Vec v) {
  size_t n = theta.size();
  // rows: reduced Krylov vectors; combo[i]: expression of reduced row in terms
  // of original powers.
  std::vector<Vec> reduced;
  std::vector<Vec> combo;
  std::vector<int> lead;
  Vec cur = v;
  for (size_t step = 0; step <= n; ++step) {
    Vec expr(n + 2, 0);
    expr[step] = 1;
    Vec r = cur;
    for (size_t i = 0; i < reduced.size(); ++i) {
      if (r[lead[i]] == 0) continue;
      u64 factor = r[lead[i]];
      for (size_t j = 0; j < n; ++j) r[j] = f.sub(r[j], f.mul(factor, reduced[i][j]));
      for (size_t j = 0; j < n + 2; ++j) expr[j] = f.sub(expr[j], f.mul(factor, combo[i][j]));
    }
    int ld = -1;
    for (size_t j = 0; j < n; ++j)
      if (r[j] != 0) {
        ld = static_cast<int>(j);
        break;
      }
    if (ld < 0) {
      // dependency found: expr gives the min poly coefficients (up to scale)
      u64 scale = f.inv(expr[step]);
      Vec poly(step + 1);
      for (size_t j = 0; j <= step; ++j) poly[j] = f.mul(expr[j], scale);
      return poly;
    }
    u64 inv = f.inv(r[ld]);
    for (size_t j = 0; j < n; ++j) r[j] = f.mul(r[j], inv);
    for (size_t j = 0; j < n + 2; ++j) expr[j] = f.mul(expr[j], inv);
    reduced.push_back(std::move(r));
    combo.push_back(std::move(expr));
    lead.push_back(ld);
    cur = mat_vec(f, theta, cur);
  }
  fail("char_theory.TableComputationFailed", "Krylov chain did not terminate");
}

// Polynomials over F_p as coefficient vectors (low degree first).
Vec poly_mod(const Fp& f, Vec a, const Vec& m) {
  while (a.size() >= m.size()) {
    u64 c = a.back();
    if (c != 0) {
      size_t shift = a.size() - m.size();
      for (size_t j = 0; j < m.size(); ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, m[j]));
    }
    a.pop_back();
  }
  return a;
}

Vec poly_mul_mod(const Fp& f, const Vec& a, const Vec& b, const Vec& m) {
  Vec out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  return poly_mod(f, std::move(out), m);
}

Vec poly_pow_mod(const Fp& f, Vec base, u64 e, const Vec& m) {
  Vec out{1};
  base = poly_mod(f, std::move(base), m);
  while (e) {
    if (e & 1) out = poly_mul_mod(f, out, base, m);
    base = poly_mul_mod(f, base, base, m);
    e >>= 1;
  }
  return out;
}

Vec poly_gcd(const Fp& f, Vec a, Vec b) {
  auto trim = [](Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    u64 inv = f.inv(b.back());
    while (a.size() >= b.size()) {
      u64 c = f.mul(a.back(), inv);
      size_t shift = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

// Roots of a squarefree totally split polynomial, by quadratic-residue
// splitting with random shifts.
void split_roots(const Fp& f, Vec poly, std::vector<u64>& roots, std::mt19937_64& rng) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  if (poly.size() <= 1) return;
  if (poly.size() == 2) {
    roots.push_back(f.mul(f.sub(0, poly[0]), f.inv(poly[1])));
    return;
  }
  for (int attempt = 0; attempt < 200; ++attempt) {
    u64 a = rng() % f.p;
    // gcd(poly, (x+a)^{(p-1)/2} - 1)
    Vec xa{a, 1};
    Vec pw = poly_pow_mod(f, xa, (f.p - 1) / 2, poly);
    if (pw.empty()) continue;
    pw[0] = f.sub(pw[0], 1);
    Vec g = poly_gcd(f, poly, pw);
    if (g.size() <= 1 || g.size() >= poly.size()) continue;
    // poly / g
    Vec q;
    {
      Vec rem = poly;
      u64 inv = f.inv(g.back());
      q.assign(rem.size() - g.size() + 1, 0);
      for (long i = static_cast<long>(rem.size()) - 1;
           i >= static_cast<long>(g.size()) - 1; --i) {
        u64 c = f.mul(rem[i], inv);
        long shift = i - (static_cast<long>(g.size()) - 1);
        q[shift] = c;
        if (c != 0)
          for (size_t j = 0; j < g.size(); ++j)
            rem[shift + j] = f.sub(rem[shift + j], f.mul(c, g[j]));
      }
    }
    split_roots(f, g, roots, rng);
    split_roots(f, q, roots, rng);
    return;
  }
  fail("char_theory.TableComputationFailed", "root splitting did not converge");
}

struct RowSortKey {
  int dim;
  std::vector<Cyclotomic> vals;
};

}  // namespace

CharacterTable character_table_from_parts(const FiniteGroup& g, std::vector<int> dims,
                                          std::vector<std::vector<Cyclotomic>> values) {
  CharacterTable t;
  t.group_order = g.order;
  t.exponent = g.exponent;
  for (int c = 0; c < g.num_classes(); ++c) t.class_sizes.push_back(g.class_size(c));
  t.inverse_class = g.inverse_class;
  require(dims.size() == values.size(), "char_theory.InvalidTable", "row shape mismatch");
  for (auto& row : values) {
    require(static_cast<int>(row.size()) == g.num_classes(), "char_theory.InvalidTable",
            "row length != number of classes");
    for (auto& v : row) {
      require(t.exponent % v.order() == 0, "char_theory.InvalidTable",
              "character value outside Q(zeta_N) for N = exponent(G)");
      v = v.embedded(t.exponent);
    }
  }
  t.dims = std::move(dims);
  t.values = std::move(values);

  // Deterministic row order: ascending dimension, then descending values.
  std::vector<int> perm(t.dims.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (t.dims[a] != t.dims[b]) return t.dims[a] < t.dims[b];
    for (int c = 0; c < t.num_classes(); ++c) {
      int cmp = Cyclotomic::compare_canonical(t.values[a][c], t.values[b][c]);
      if (cmp != 0) return cmp > 0;
    }
    return false;
  });
  std::vector<int> dims_sorted;
  std::vector<std::vector<Cyclotomic>> values_sorted;
  for (int i : perm) {
    dims_sorted.push_back(t.dims[i]);
    values_sorted.push_back(std::move(t.values[i]));
  }
  t.dims = std::move(dims_sorted);
  t.values = std::move(values_sorted);

  for (int d : t.dims) t.nu.push_back(Rational(d, g.order) * Rational(d, g.order));

  validate_character_table(g, t);
  return t;
}

void validate_character_table(const FiniteGroup& g, const CharacterTable& t) {
  int nc = t.num_classes();
  int ni = t.num_irreps();
  require(nc == g.num_classes() && t.group_order == g.order, "char_theory.InvalidTable",
          "table does not match group");
  require(ni == nc, "char_theory.OrthogonalityFailed",
          "number of irreps != number of classes");
  long dim_sq = 0;
  for (int i = 0; i < ni; ++i) {
    require(t.dims[i] >= 1, "char_theory.InvalidTable", "nonpositive dimension");
    require(t.values[i][0] == Cyclotomic(Rational(t.dims[i])), "char_theory.InvalidTable",
            "value at identity != dimension");
    dim_sq += static_cast<long>(t.dims[i]) * t.dims[i];
  }
  require(dim_sq == g.order, "char_theory.OrthogonalityFailed",
          "sum of squared dimensions != |G|");

  // Row orthogonality: sum_h chi_a(h^{-1}) chi_b(h) = |G| delta_ab.
  for (int a = 0; a < ni; ++a)
    for (int b = 0; b < ni; ++b) {
      Cyclotomic s;
      for (int c = 0; c < nc; ++c)
        s += Cyclotomic(Rational(t.class_sizes[c])) * t.value_at_inverse(a, c) * t.value(b, c);
      Cyclotomic expect(Rational(a == b ? g.order : 0));
      require(s == expect, "char_theory.OrthogonalityFailed", "row orthogonality violated");
    }
  // Column orthogonality: sum_gamma chi(h^{-1}) chi(h') = |C(h)| delta_[h][h'].
  for (int c1 = 0; c1 < nc; ++c1)
    for (int c2 = 0; c2 < nc; ++c2) {
      Cyclotomic s;
      for (int a = 0; a < ni; ++a) s += t.value_at_inverse(a, c1) * t.value(a, c2);
      Cyclotomic expect(Rational(c1 == c2 ? g.centralizer_order[c1] : 0));
      require(s == expect, "char_theory.OrthogonalityFailed", "column orthogonality violated");
    }
}

CharacterTable character_table(const FiniteGroup& g) {
  int nc = g.num_classes();
  int N = g.exponent;

  // c_{ijk} |K_k| counts, then normalized.
  std::vector<Mat> class_mats_z(nc, Mat(nc, Vec(nc, 0)));
  for (int i = 0; i < nc; ++i) {
    for (int x : g.classes[i])
      for (int y = 0; y < g.order; ++y) {
        int j = g.class_of[y];
        int k = g.class_of[g.mul(x, y)];
        ++class_mats_z[i][k][j];
      }
    for (int k = 0; k < nc; ++k)
      for (int j = 0; j < nc; ++j) {
        require(class_mats_z[i][k][j] % g.class_size(k) == 0,
                "char_theory.TableComputationFailed", "class constant not divisible");
        class_mats_z[i][k][j] /= static_cast<u64>(g.class_size(k));
      }
  }

  std::mt19937_64 rng(0x5eed0123456789abULL);

  u64 p_min = std::max<u64>(2ull * g.order * g.order, 1000);
  u64 p = (p_min / N) * N + 1;
  for (int attempt = 0; attempt < 24; ++attempt) {
    while (!(p > p_min && p % N == 1 % N && is_prime(p))) p += N;
    Fp f{p};

    std::vector<Mat> class_mats = class_mats_z;  // already < p

    bool ok = true;
    std::vector<Vec> omegas;  // per irrep: central character values on classes
    for (int tries = 0; tries < 8 && omegas.empty(); ++tries) {
      Mat theta(nc, Vec(nc, 0));
      for (int i = 0; i < nc; ++i) {
        u64 r = rng() % p;
        for (int k = 0; k < nc; ++k)
          for (int j = 0; j < nc; ++j)
            theta[k][j] = f.add(theta[k][j], f.mul(r, class_mats[i][k][j]));
      }
      Vec v(nc);
      for (auto& x : v) x = rng() % p;
      Vec minpoly = krylov_min_poly(f, theta, v);
      if (static_cast<int>(minpoly.size()) != nc + 1) continue;  // not separating
      std::vector<u64> roots;
      split_roots(f, minpoly, roots, rng);
      if (static_cast<int>(roots.size()) != nc) continue;
      std::sort(roots.begin(), roots.end());
      std::vector<Vec> found;
      for (u64 lam : roots) {
        Mat shifted = theta;
        for (int i = 0; i < nc; ++i) shifted[i][i] = f.sub(shifted[i][i], lam);
        auto basis = nullspace(f, shifted);
        if (basis.size() != 1) {
          found.clear();
          break;
        }
        const Vec& x = basis[0];
        int piv = -1;
        for (int i = 0; i < nc; ++i)
          if (x[i] != 0) {
            piv = i;
            break;
          }
        Vec omega(nc);
        bool simultaneous = true;
        for (int i = 0; i < nc && simultaneous; ++i) {
          Vec mx = mat_vec(f, class_mats[i], x);
          u64 w = f.mul(mx[piv], f.inv(x[piv]));
          for (int j = 0; j < nc; ++j)
            if (mx[j] != f.mul(w, x[j])) {
              simultaneous = false;
              break;
            }
          omega[i] = w;
        }
        if (!simultaneous) {
          found.clear();
          break;
        }
        found.push_back(std::move(omega));
      }
      if (static_cast<int>(found.size()) == nc) omegas = std::move(found);
    }
    if (omegas.empty()) {
      p += N;
      continue;
    }

    u64 gen = primitive_root(f);
    u64 z = f.pow(gen, (p - 1) / N);  // fixed primitive N-th root: zeta_N mod p

    std::vector<int> dims;
    std::vector<std::vector<Cyclotomic>> rows;
    for (const Vec& omega : omegas) {
      // dim^2 = |G| / (sum_i omega_i omega_{i*} / |K_i|)
      u64 s = 0;
      for (int i = 0; i < nc; ++i)
        s = f.add(s, f.mul(f.mul(omega[i], omega[g.inverse_class[i]]),
                           f.inv(static_cast<u64>(g.class_size(i)))));
      if (s == 0) {
        ok = false;
        break;
      }
      u64 d2 = f.mul(static_cast<u64>(g.order), f.inv(s));
      int dim = 0;
      for (int d = 1; static_cast<long>(d) * d <= g.order; ++d)
        if (f.mul(d, d) == d2) {
          dim = d;
          break;
        }
      if (dim == 0) {
        ok = false;
        break;
      }
      Vec chi_p(nc);
      for (int i = 0; i < nc; ++i)
        chi_p[i] = f.mul(f.mul(static_cast<u64>(dim), omega[i]),
                         f.inv(static_cast<u64>(g.class_size(i))));

      std::vector<Cyclotomic> row(nc);
      for (int i = 0; i < nc; ++i) {
        int h = g.class_rep[i];
        int o = g.element_order[h];
        u64 zo = f.pow(z, static_cast<u64>(N / o));  // primitive o-th root
        std::vector<Rational> mults;
        bool lift_ok = true;
        for (int j = 0; j < o; ++j) {
          u64 acc = 0;
          for (int k = 0; k < o; ++k) {
            u64 val = chi_p[g.class_of[g.power(h, k)]];
            u64 ph = f.pow(zo, static_cast<u64>((static_cast<long>(o) - j) * k % o));
            acc = f.add(acc, f.mul(val, ph));
          }
          acc = f.mul(acc, f.inv(static_cast<u64>(o)));
          if (acc > static_cast<u64>(dim)) {
            lift_ok = false;
            break;
          }
          mults.push_back(Rational(static_cast<long>(acc)));
        }
        if (!lift_ok) {
          ok = false;
          break;
        }
        Cyclotomic val;
        for (int j = 0; j < o; ++j)
          val += Cyclotomic::root_of_unity(N, static_cast<long>(j) * (N / o)) * mults[j];
        row[i] = val.embedded(N);
      }
      if (!ok) break;
      dims.push_back(dim);
      rows.push_back(std::move(row));
    }

    if (ok) {
      try {
        return character_table_from_parts(g, std::move(dims), std::move(rows));
      } catch (const Error&) {
        // fall through to a new prime
      }
    }
    p += N;
  }
  fail("char_theory.TableComputationFailed", "Dixon lifting failed over all attempted primes");
}

std::vector<Cyclotomic> class_to_phi_coords(const FiniteGroup& g, const CharacterTable& t,
                                            const std::vector<Cyclotomic>& class_coords) {
  require(static_cast<int>(class_coords.size()) == t.num_classes(), "char_theory.BadCoords",
          "coordinate length != number of classes");
  std::vector<Cyclotomic> out(t.num_irreps());
  for (int a = 0; a < t.num_irreps(); ++a) {
    Cyclotomic s;
    for (int c = 0; c < t.num_classes(); ++c) {
      if (class_coords[c].is_zero()) continue;
      s += class_coords[c] * t.value(a, c) * Rational(t.class_sizes[c], t.dims[a]);
    }
    out[a] = s;
  }
  return out;
}

std::vector<Cyclotomic> phi_to_class_coords(const FiniteGroup& g, const CharacterTable& t,
                                            const std::vector<Cyclotomic>& phi_coords) {
  require(static_cast<int>(phi_coords.size()) == t.num_irreps(), "char_theory.BadCoords",
          "coordinate length != number of irreps");
  std::vector<Cyclotomic> out(t.num_classes());
  for (int c = 0; c < t.num_classes(); ++c) {
    Cyclotomic s;
    for (int a = 0; a < t.num_irreps(); ++a) {
      if (phi_coords[a].is_zero()) continue;
      s += phi_coords[a] * t.value_at_inverse(a, c) * Rational(t.dims[a], g.order);
    }
    out[c] = s;
  }
  return out;
}

}  // namespace ogw
