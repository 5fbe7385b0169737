#include "ogw/chen_ruan.hpp"
#include <mutex>

namespace ogw {

ChenRuan::ChenRuan(const FiniteGroup& g, const CharacterTable& t, RepSpec rep)
    : g_(&g), t_(&t), rep_(std::move(rep)) {
  require(rep_.num_summands() >= 1, "chen_ruan.InvalidRep", "rep needs at least one summand");
  for (int s : rep_.summands)
    require(s >= 0 && s < t.num_irreps(), "chen_ruan.InvalidRep", "bad irrep index in rep");
}

int ChenRuan::total_dim() const {
  int r = 0;
  for (int i = 0; i < m(); ++i) r += summand_dim(i);
  return r;
}

EigenProfile ChenRuan::eigen_profile_of_irrep(int irrep, int cls) const {
  int h = g_->class_rep[cls];
  int o = g_->element_order[h];
  int N = g_->exponent;
  // D(l) = (1/o) sum_k chi(h^k) zeta_o^{-kl}, evaluated exactly in Q(zeta_N).
  EigenProfile prof;
  prof.order = o;
  prof.mult.resize(o);
  long dim_sum = 0;
  for (int l = 0; l < o; ++l) {
    Cyclotomic acc;
    for (int k = 0; k < o; ++k) {
      const Cyclotomic& chi = t_->value(irrep, g_->class_of[g_->power(h, k)]);
      acc += chi * Cyclotomic::root_of_unity(N, -static_cast<long>(k) * l * (N / o));
    }
    acc = acc * Rational(1, o);
    require(acc.is_rational(), "chen_ruan.NonIntegerMultiplicity",
            "eigenvalue multiplicity not rational");
    Rational q = acc.rational_part();
    require(is_integer(q) && q >= 0, "chen_ruan.NonIntegerMultiplicity",
            "eigenvalue multiplicity not a nonnegative integer");
    prof.mult[l] = static_cast<long>(q.get_num().get_si());
    dim_sum += prof.mult[l];
    prof.age += Rational(l, o) * q;
  }
  require(dim_sum == t_->dims[irrep], "chen_ruan.NonIntegerMultiplicity",
          "eigenvalue multiplicities do not sum to the dimension");
  return prof;
}

const EigenProfile& ChenRuan::profile(int i, int cls) const {
  require(i >= 0 && i < m(), "chen_ruan.InvalidRep", "summand index out of range");
  std::pair<int, int> key{i, cls};
  {
    std::shared_lock rd(memo_mu_);
    auto it = profile_memo_.find(key);
    if (it != profile_memo_.end()) return it->second;
  }
  EigenProfile prof = eigen_profile_of_irrep(rep_.summands[i], cls);
  std::unique_lock wr(memo_mu_);
  return profile_memo_.emplace(key, std::move(prof)).first->second;
}

Rational ChenRuan::age_total(int cls) const {
  Rational s(0);
  for (int i = 0; i < m(); ++i) s += age(i, cls);
  return s;
}

long ChenRuan::fixed_dim(int cls) const {
  long s = 0;
  for (int i = 0; i < m(); ++i) s += profile(i, cls).mult[0];
  return s;
}

EquivariantScalar ChenRuan::euler_factor(int cls) const {
  EquivariantScalar::ExpVec e(m());
  for (int i = 0; i < m(); ++i) e[i] = Rational(profile(i, cls).mult[0]);
  return EquivariantScalar::monomial(m(), std::move(e), Cyclotomic(Rational(1)));
}

EquivariantScalar ChenRuan::euler_one_half_pow(long p) const {
  EquivariantScalar::ExpVec e(m());
  for (int i = 0; i < m(); ++i) e[i] = Rational(summand_dim(i)) * Rational(p, 2);
  return EquivariantScalar::monomial(m(), std::move(e), Cyclotomic(Rational(1)));
}

EquivariantScalar ChenRuan::age_monomial(int cls) const {
  EquivariantScalar::ExpVec e(m());
  for (int i = 0; i < m(); ++i) e[i] = age(i, cls);
  return EquivariantScalar::monomial(m(), std::move(e), Cyclotomic(Rational(1)));
}

EquivariantScalar ChenRuan::nubar(int irrep) const {
  return EquivariantScalar::constant(m(), nu(irrep)) * euler_one().monomial_inverse();
}

Rational ChenRuan::pairing_bg_class(int c1, int c2) const {
  if (g_->inverse_class[c1] != c2) return Rational(0);
  return Rational(1, g_->centralizer_order[c1]);
}

Rational ChenRuan::pairing_bg_phi(int a, int b) const {
  return a == b ? t_->nu[a] : Rational(0);
}

EquivariantScalar ChenRuan::pairing_x_class(int c1, int c2) const {
  if (g_->inverse_class[c1] != c2) return EquivariantScalar(m());
  EquivariantScalar out = euler_factor(c1).monomial_inverse();
  return out / Rational(g_->centralizer_order[c1]);
}

Rational ChenRuan::pairing_x_class_nonequivariant(int c1, int c2) const {
  if (g_->inverse_class[c1] != c2) return Rational(0);
  if (fixed_dim(c1) != 0) return Rational(0);
  return Rational(1, g_->centralizer_order[c1]);
}

EquivariantScalar ChenRuan::pairing_x_classbar(int c1, int c2) const {
  if (g_->inverse_class[c1] != c2) return EquivariantScalar(m());
  EquivariantScalar out = euler_one().monomial_inverse();
  return out / Rational(g_->centralizer_order[c1]);
}

EquivariantScalar ChenRuan::pairing_x_phibar(int a, int b) const {
  if (a != b) return EquivariantScalar(m());
  return nubar(a);
}

std::vector<Rational> ChenRuan::cup_bg_class(int c1, int c2) const {
  std::vector<Rational> out(g_->num_classes(), Rational(0));
  for (int x : g_->classes[c1])
    for (int y : g_->classes[c2]) {
      int z = g_->mul(x, y);
      out[g_->class_of[z]] += Rational(g_->centralizer_order_of(z), g_->order);
    }
  return out;
}

std::vector<Rational> ChenRuan::cup_bg_phi(int a, int b) const {
  std::vector<Rational> out(t_->num_irreps(), Rational(0));
  if (a == b) out[a] = Rational(1);
  return out;
}

std::vector<EquivariantScalar> ChenRuan::cup_x_class(int c1, int c2) const {
  std::vector<EquivariantScalar> out(g_->num_classes(), EquivariantScalar(m()));
  for (int x : g_->classes[c1])
    for (int y : g_->classes[c2]) {
      int z = g_->mul(x, y);
      int cz = g_->class_of[z];
      // w^{age(g) + age(g') - age(gg')}: class functions, so representatives
      // are immaterial (verified by test rather than assumed).
      EquivariantScalar::ExpVec e(m());
      for (int i = 0; i < m(); ++i) e[i] = age(i, c1) + age(i, c2) - age(i, cz);
      EquivariantScalar mono = EquivariantScalar::monomial(
          m(), std::move(e), Cyclotomic(Rational(g_->centralizer_order_of(z), g_->order)));
      out[cz] += mono;
    }
  return out;
}

std::vector<Rational> ChenRuan::cup_x_classbar(int c1, int c2) const {
  return cup_bg_class(c1, c2);
}

std::vector<Rational> ChenRuan::cup_x_phibar(int a, int b) const {
  return cup_bg_phi(a, b);
}

}  // namespace ogw
