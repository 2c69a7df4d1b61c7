#include "internal.hpp"
#include "minbu/errors.hpp"
#include "minbu/ladder/ladder.hpp"

namespace minbu {

namespace {

LadderFamily empty_like(const LadderFamily& shape, FamilyId id) {
  LadderFamily fam;
  fam.id = id;
  fam.variable = shape.variable;
  fam.l_max = shape.l_max;
  fam.order = shape.order;
  fam.entries.assign(static_cast<size_t>(shape.l_max) + 1, TruncatedSeries::zero(shape.order, shape.variable));
  return fam;
}

}  // namespace

BalancedFamilies solve_balanced_families(const MarkedFamilies& m) {
  if (m.h.id != FamilyId::h || m.f.id != FamilyId::f || m.q.id != FamilyId::q) {
    throw DomainError("balanced families are defined on the z side only");
  }
  if (m.f.l_max != m.h.l_max || m.q.l_max != m.h.l_max || m.f.order != m.h.order || m.q.order != m.h.order) {
    throw DomainError("marked families must share l_max and order");
  }
  int L = m.h.l_max;
  int n = m.h.order;
  Variable v = m.h.variable;
  if (m.h[1][0] != 1) throw DomainError("h_1 must have unit constant term");
  TruncatedSeries one = TruncatedSeries::one(n, v);
  TruncatedSeries inv_h1 = div(one, m.h[1]);

  BalancedFamilies b{empty_like(m.h, FamilyId::g), empty_like(m.h, FamilyId::e), empty_like(m.h, FamilyId::p)};
  auto& g = b.g.entries;
  auto& e = b.e.entries;
  auto& p = b.p.entries;

  // h_l = delta_{l,1} + sum_{k<=l} g_k h_{l+1-k}
  for (int l = 1; l <= L; ++l) {
    TruncatedSeries acc = m.h[l];
    if (l == 1) acc = sub(acc, one);
    for (int k = 1; k < l; ++k) acc = sub(acc, mul(g[static_cast<size_t>(k)], m.h[l + 1 - k]));
    g[static_cast<size_t>(l)] = mul(acc, inv_h1);
  }
  // f_l = delta_{l,1} + (e_l - g_l) + sum_{k<=l} g_k f_{l+1-k}
  for (int l = 1; l <= L; ++l) {
    TruncatedSeries acc = add(m.f[l], g[static_cast<size_t>(l)]);
    if (l == 1) acc = sub(acc, one);
    for (int k = 1; k <= l; ++k) acc = sub(acc, mul(g[static_cast<size_t>(k)], m.f[l + 1 - k]));
    e[static_cast<size_t>(l)] = acc;
  }
  // p_1 = z + z r_2 (f_1 = r_2); for l >= 2, q-hat - 1 = h-hat * (p-hat - p_1)
  TruncatedSeries z = TruncatedSeries::monomial(1, BigRational(1), n, v);
  p[1] = mul(z, add(one, m.f[1]));
  for (int l = 2; l <= L; ++l) {
    TruncatedSeries acc = m.q[l];
    for (int k = 2; k < l; ++k) acc = sub(acc, mul(p[static_cast<size_t>(k)], m.h[l + 1 - k]));
    p[static_cast<size_t>(l)] = mul(acc, inv_h1);
  }
  return b;
}

ZFamilies compute_z_families(int l_max, int order) {
  ZFamilies z;
  z.r = compute_r_family(l_max + 1, order);
  z.marked = derive_marked_families(z.r);
  z.balanced = solve_balanced_families(z.marked);
  return z;
}

void verify_convolution_reexpansion(const MarkedFamilies& m, const BalancedFamilies& b) {
  int L = m.h.l_max;
  int n = m.h.order;
  TruncatedSeries one = TruncatedSeries::one(n, m.h.variable);
  for (int l = 1; l <= L; ++l) {
    TruncatedSeries h = l == 1 ? one : TruncatedSeries::zero(n, m.h.variable);
    TruncatedSeries f = add(h, sub(b.e[l], b.g[l]));
    for (int k = 1; k <= l; ++k) {
      h = add(h, mul(b.g[k], m.h[l + 1 - k]));
      f = add(f, mul(b.g[k], m.f[l + 1 - k]));
    }
    detail::require_equal(h, m.h[l], n, "h-hat = 1 + g-hat h-hat", l);
    detail::require_equal(f, m.f[l], n, "f-hat = 1 + (e-hat - g-hat) + f-hat g-hat", l);
  }
  // vertex/edge exchange: e_1 = p_2 and e_l = p_l + p_{l+1}
  if (L >= 2) detail::require_equal(b.e[1], b.p[2], n, "e_1 = p_2", 1);
  if (L >= 2) detail::require_equal(b.g[1], b.p[2], n, "g_1 = p_2", 1);
  for (int l = 2; l < L; ++l) {
    detail::require_equal(b.e[l], add(b.p[l], b.p[l + 1]), n, "e_l = p_l + p_{l+1}", l);
  }
}

}  // namespace minbu
