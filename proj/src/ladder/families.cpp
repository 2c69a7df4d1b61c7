#include <algorithm>
#include <stdexcept>

#include "minbu/errors.hpp"
#include "minbu/ladder/ladder.hpp"
#include "internal.hpp"

namespace minbu {

const char* family_name(FamilyId id) {
  switch (id) {
    case FamilyId::R: return "R";
    case FamilyId::Q: return "Q";
    case FamilyId::F: return "F";
    case FamilyId::H: return "H";
    case FamilyId::r: return "r";
    case FamilyId::q: return "q";
    case FamilyId::f: return "f";
    case FamilyId::h: return "h";
    case FamilyId::g: return "g";
    case FamilyId::e: return "e";
    case FamilyId::p: return "p";
  }
  return "?";
}

FamilyId parse_family(const std::string& name) {
  for (FamilyId id : {FamilyId::R, FamilyId::Q, FamilyId::F, FamilyId::H, FamilyId::r, FamilyId::q,
                      FamilyId::f, FamilyId::h, FamilyId::g, FamilyId::e, FamilyId::p}) {
    if (name == family_name(id)) return id;
  }
  throw DomainError("unknown family '" + name + "'");
}

const TruncatedSeries& LadderFamily::operator[](int l) const {
  if (l < 0 || l > l_max) {
    throw DomainError(std::string("family ") + family_name(id) + " has no entry " + std::to_string(l));
  }
  return entries[static_cast<size_t>(l)];
}

TruncatedSeries bulk_r(int order) { return solve_polynomial_fixed_point(BigRational(1), 3, order, Variable::z); }

TruncatedSeries bulk_R(int order) { return solve_polynomial_fixed_point(BigRational(3), 2, order, Variable::g); }

namespace {

// solution of y + 1/y + 1 = 1/u, i.e. y = Y(u) with Y the inverse of w/(1+w+w^2)
TruncatedSeries ladder_parameter(const TruncatedSeries& u) {
  int n = u.order();
  Variable v = u.variable();
  TruncatedSeries w = TruncatedSeries::monomial(1, BigRational(1), n, v);
  TruncatedSeries den = add(TruncatedSeries::one(n, v), add(w, TruncatedSeries::monomial(2, BigRational(1), n, v)));
  TruncatedSeries y_of_u = revert(div(w, den));
  return compose(y_of_u, u);
}

// bulk * (1-y^l)(1-y^{l+3}) / ((1-y^{l+1})(1-y^{l+2})) for l = 0..l_last
std::vector<TruncatedSeries> closed_form_ladder(const TruncatedSeries& bulk, const TruncatedSeries& y,
                                                int l_last) {
  int n = bulk.order();
  Variable v = bulk.variable();
  TruncatedSeries one = TruncatedSeries::one(n, v);
  std::vector<TruncatedSeries> one_minus(static_cast<size_t>(l_last) + 4);
  TruncatedSeries yp = one;
  for (int k = 0; k <= l_last + 3; ++k) {
    one_minus[static_cast<size_t>(k)] = sub(one, yp);
    yp = mul(yp, y);
  }
  std::vector<TruncatedSeries> out(static_cast<size_t>(l_last) + 1);
  out[0] = TruncatedSeries::zero(n, v);
  for (int l = 1; l <= l_last; ++l) {
    auto num = mul(one_minus[static_cast<size_t>(l)], one_minus[static_cast<size_t>(l + 3)]);
    auto den = mul(one_minus[static_cast<size_t>(l + 1)], one_minus[static_cast<size_t>(l + 2)]);
    out[static_cast<size_t>(l)] = mul(bulk, div(num, den));
  }
  return out;
}

}  // namespace

LadderFamily compute_r_family(int l_max, int order) {
  if (l_max < 1) throw DomainError("l_max must be >= 1");
  if (order < 1) throw DomainError("order must be >= 1");
  // r_l = r + O(z^l): entries beyond l_rec are the bulk value
  int l_rec = std::min(l_max, order + 1);
  int l_work = std::max(l_rec, 2);
  int w = order + l_work;
  TruncatedSeries r = bulk_r(w);
  TruncatedSeries z = TruncatedSeries::monomial(1, BigRational(1), w, Variable::z);
  TruncatedSeries one = TruncatedSeries::one(w, Variable::z);

  std::vector<TruncatedSeries> rec(static_cast<size_t>(l_work) + 1);
  rec[0] = TruncatedSeries::zero(w, Variable::z);
  rec[1] = one;
  rec[2] = add(sub(scale(r, BigRational(3)), one), div(sub(one, r), mul(z, r)));
  for (int l = 2; l < l_work; ++l) {
    auto den = mul(z, mul(rec[static_cast<size_t>(l - 1)], rec[static_cast<size_t>(l)]));
    rec[static_cast<size_t>(l + 1)] = div(sub(rec[static_cast<size_t>(l)], one), den);
  }
  // r_2 = 3r - 1 - r^2
  auto r2_alt = sub(sub(scale(r, BigRational(3)), one), mul(r, r));
  detail::require_equal(rec[2], r2_alt, order, "r_2 two forms", 2);

  TruncatedSeries rn = r.truncated(order);
  TruncatedSeries zn = z.truncated(order);
  TruncatedSeries y = ladder_parameter(mul(zn, mul(rn, rn)));
  auto closed = closed_form_ladder(rn, y, l_work);
  for (int l = 0; l <= l_work; ++l) {
    detail::require_equal(rec[static_cast<size_t>(l)], closed[static_cast<size_t>(l)], order,
                  "r family recursion vs closed form", l);
  }

  LadderFamily fam;
  fam.id = FamilyId::r;
  fam.variable = Variable::z;
  fam.l_max = l_max;
  fam.order = order;
  fam.entries.resize(static_cast<size_t>(l_max) + 1);
  for (int l = 0; l <= l_max; ++l) {
    fam.entries[static_cast<size_t>(l)] = l <= l_work ? closed[static_cast<size_t>(l)] : rn;
  }
  return fam;
}

LadderFamily compute_R_family(int l_max, int order) {
  if (l_max < 1) throw DomainError("l_max must be >= 1");
  if (order < 1) throw DomainError("order must be >= 1");
  int l_rec = std::min(l_max, order + 1);
  int l_work = std::max(l_rec, 2);
  int w = order + l_work;
  TruncatedSeries R = bulk_R(w);
  TruncatedSeries g = TruncatedSeries::monomial(1, BigRational(1), w, Variable::g);
  TruncatedSeries one = TruncatedSeries::one(w, Variable::g);
  TruncatedSeries R1 = sub(R, mul(g, mul(R, mul(R, R))));

  std::vector<TruncatedSeries> rec(static_cast<size_t>(l_work) + 1);
  rec[0] = TruncatedSeries::zero(w, Variable::g);
  rec[1] = R1;
  // R_1 (1 - g (R_0 + R_1 + R_2)) = 1
  rec[2] = sub(div(sub(one, div(one, R1)), g), R1);
  for (int l = 2; l < l_work; ++l) {
    auto den = mul(g, mul(rec[static_cast<size_t>(l - 1)], rec[static_cast<size_t>(l)]));
    rec[static_cast<size_t>(l + 1)] = div(sub(rec[static_cast<size_t>(l)], R1), den);
  }

  TruncatedSeries Rn = R.truncated(order);
  TruncatedSeries gn = g.truncated(order);
  TruncatedSeries x = ladder_parameter(mul(gn, mul(Rn, Rn)));
  auto closed = closed_form_ladder(Rn, x, l_work);
  for (int l = 0; l <= l_work; ++l) {
    detail::require_equal(rec[static_cast<size_t>(l)], closed[static_cast<size_t>(l)], order,
                  "R family recursion vs closed form", l);
  }

  LadderFamily fam;
  fam.id = FamilyId::R;
  fam.variable = Variable::g;
  fam.l_max = l_max;
  fam.order = order;
  fam.entries.resize(static_cast<size_t>(l_max) + 1);
  for (int l = 0; l <= l_max; ++l) {
    fam.entries[static_cast<size_t>(l)] = l <= l_work ? closed[static_cast<size_t>(l)] : Rn;
  }
  return fam;
}

MarkedFamilies derive_marked_families(const LadderFamily& base) {
  bool general = base.id == FamilyId::R;
  if (!general && base.id != FamilyId::r) throw DomainError("marked families need an R or r family");
  if (base.l_max < 2) throw DomainError("base family needs l_max >= 2");
  int L = base.l_max - 1;
  int n = base.order;
  Variable v = base.variable;
  MarkedFamilies m;
  m.q.id = general ? FamilyId::Q : FamilyId::q;
  m.f.id = general ? FamilyId::F : FamilyId::f;
  m.h.id = general ? FamilyId::H : FamilyId::h;
  for (LadderFamily* fam : {&m.q, &m.f, &m.h}) {
    fam->variable = v;
    fam->l_max = L;
    fam->order = n;
    fam->entries.assign(static_cast<size_t>(L) + 1, TruncatedSeries::zero(n, v));
  }
  for (int l = 1; l <= L; ++l) {
    m.q.entries[static_cast<size_t>(l)] = sub(base[l], base[l - 1]);
    m.f.entries[static_cast<size_t>(l)] = sub(base[l + 1], base[l - 1]);
    m.h.entries[static_cast<size_t>(l)] = mul(base[l], m.f[l]);
  }
  if (!general) {
    // f_l = delta_{l,1} + z r_l (f_{l-1} r_{l-1} + f_l r_l + f_{l+1} r_{l+1})
    TruncatedSeries z = TruncatedSeries::monomial(1, BigRational(1), n, v);
    for (int l = 1; l < L; ++l) {
      auto inner = add(mul(m.f[l - 1], base[l - 1]),
                       add(mul(m.f[l], base[l]), mul(m.f[l + 1], base[l + 1])));
      auto rhs = mul(z, mul(base[l], inner));
      if (l == 1) rhs = add(rhs, TruncatedSeries::one(n, v));
      detail::require_equal(m.f[l], rhs, n, "f recursion", l);
    }
  }
  return m;
}

void verify_conservation(const LadderFamily& base) {
  bool general = base.id == FamilyId::R;
  if (!general && base.id != FamilyId::r) throw DomainError("conservation applies to R or r families");
  int n = base.order;
  Variable v = base.variable;
  TruncatedSeries x = TruncatedSeries::monomial(1, BigRational(1), n, v);
  TruncatedSeries conserved = general ? base[1] : TruncatedSeries::one(n, v);
  for (int l = 1; l < base.l_max; ++l) {
    auto c = sub(base[l], mul(x, mul(base[l - 1], mul(base[l], base[l + 1]))));
    detail::require_equal(c, conserved, n, general ? "conservation C_l = R_1" : "conservation c_l = 1", l);
  }
}

}  // namespace minbu
