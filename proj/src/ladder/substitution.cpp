#include "internal.hpp"
#include "minbu/errors.hpp"
#include "minbu/ladder/ladder.hpp"

namespace minbu {

SubstitutionPair build_substitution(int order) {
  if (order < 1) throw DomainError("order must be >= 1");
  TruncatedSeries R = bulk_R(order);
  TruncatedSeries g = TruncatedSeries::monomial(1, BigRational(1), order, Variable::g);
  TruncatedSeries R1 = sub(R, mul(g, mul(R, mul(R, R))));
  SubstitutionPair s;
  s.order = order;
  s.z_of_g = mul(g, mul(R1, R1));
  s.g_of_z = revert(s.z_of_g.with_variable(Variable::z));
  auto id = compose(s.z_of_g.with_variable(Variable::z), s.g_of_z);
  detail::require_equal(id, TruncatedSeries::monomial(1, BigRational(1), order, Variable::z), order,
                        "z(g(z)) = z", 0);
  return s;
}

void verify_substitution(int l_max, int order) {
  SubstitutionPair s = build_substitution(order);
  LadderFamily R = compute_R_family(l_max + 1, order);
  MarkedFamilies general = derive_marked_families(R);
  ZFamilies zf = compute_z_families(l_max, order);
  Composer at_z_of_g(s.z_of_g, order);
  const TruncatedSeries& R1 = R[1];
  TruncatedSeries R1sq = mul(R1, R1);
  for (int l = 1; l <= l_max; ++l) {
    detail::require_equal(R[l], mul(R1, at_z_of_g(zf.r[l])), order, "R_l = R_1 r_l(z(g))", l);
    detail::require_equal(general.f[l], mul(R1, at_z_of_g(zf.marked.f[l])), order, "F_l = R_1 f_l(z(g))", l);
    detail::require_equal(general.h[l], mul(R1sq, at_z_of_g(zf.marked.h[l])), order,
                          "H_l = R_1^2 h_l(z(g))", l);
  }
  TruncatedSeries one = TruncatedSeries::one(order, Variable::g);
  detail::require_equal(R1, add(one, at_z_of_g(zf.balanced.p[1])), order, "R_1 = 1 + p_1(z(g))", 1);
}

}  // namespace minbu
