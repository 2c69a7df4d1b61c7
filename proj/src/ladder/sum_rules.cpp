#include "internal.hpp"
#include "minbu/errors.hpp"
#include "minbu/ladder/ladder.hpp"

namespace minbu {

namespace {

TruncatedSeries sum_entries(const LadderFamily& fam) {
  TruncatedSeries s = TruncatedSeries::zero(fam.order, fam.variable);
  for (int l = 1; l <= fam.l_max; ++l) s = add(s, fam[l]);
  return s;
}

void check_ratio(const TruncatedSeries& num, const TruncatedSeries& p1, int order, const std::string& rule,
                 BigRational (*expected)(int)) {
  for (int n = 1; n <= order; ++n) {
    if (sgn(p1[n]) == 0) continue;
    BigRational ratio = num[n] / p1[n];
    if (ratio != expected(n)) {
      throw VerificationFailure(rule + " at n=" + std::to_string(n) + ": got " + to_fraction(ratio) +
                                ", expected " + to_fraction(expected(n)));
    }
  }
}

}  // namespace

SumRuleReport sum_rules(int order) {
  if (order < 1) throw DomainError("order must be >= 1");
  // every l <= n + 1 contributes at z^n, so l_max = N + 2 captures the full sums
  ZFamilies zf = compute_z_families(order + 2, order);
  TruncatedSeries r = zf.r[zf.r.l_max];  // bulk value to this order
  TruncatedSeries z = TruncatedSeries::monomial(1, BigRational(1), order, Variable::z);
  TruncatedSeries one = TruncatedSeries::one(order, Variable::z);
  SumRuleReport rep;
  rep.order = order;

  detail::require_equal(r, bulk_r(order), order, "r_l -> r", zf.r.l_max);
  detail::require_equal(sum_entries(zf.marked.f), sub(scale(r, BigRational(2)), one), order,
                        "f-hat(1) = 2r - 1", 0);
  rep.checks.push_back("f-hat(1) = 2r - 1");
  detail::require_equal(sum_entries(zf.marked.h), mul(r, r), order, "h-hat(1) = r^2", 0);
  rep.checks.push_back("h-hat(1) = r^2");
  TruncatedSeries e1 = sum_entries(zf.balanced.e);
  TruncatedSeries g1 = sum_entries(zf.balanced.g);
  TruncatedSeries p1hat = sum_entries(zf.balanced.p);
  detail::require_equal(e1, scale(mul(z, r), BigRational(2)), order, "e-hat(1) = 2zr", 0);
  rep.checks.push_back("e-hat(1) = 2zr");
  detail::require_equal(g1, mul(mul(z, r), add(r, one)), order, "g-hat(1) = zr(r+1)", 0);
  rep.checks.push_back("g-hat(1) = zr(r+1)");

  const TruncatedSeries& p1 = zf.balanced.p[1];
  check_ratio(e1, p1, order, "e-hat(1)/p1 = n", [](int n) { return BigRational(n); });
  rep.checks.push_back("e-hat(1)/p1 = n");
  check_ratio(g1, p1, order, "g-hat(1)/p1 = 2n-1", [](int n) { return BigRational(2 * n - 1); });
  rep.checks.push_back("g-hat(1)/p1 = 2n-1");
  check_ratio(p1hat, p1, order, "p-hat(1)/p1 = (n+2)/2", [](int n) { return rational(n + 2, 2); });
  rep.checks.push_back("p-hat(1)/p1 = (n+2)/2");
  return rep;
}

TruncatedSeries twop_angulation_root_gf(int p, int order) {
  if (p < 2) throw DomainError("2p-angulations need p >= 2");
  BigRational a(binomial(static_cast<unsigned long>(2 * p - 1), static_cast<unsigned long>(p)));
  BigRational b(binomial(static_cast<unsigned long>(2 * p - 1), static_cast<unsigned long>(p + 1)));
  TruncatedSeries r = solve_polynomial_fixed_point(b, p + 1, order, Variable::z);
  TruncatedSeries z = TruncatedSeries::monomial(1, BigRational(1), order, Variable::z);
  // z multiplies both terms; the p = 2 case then reduces to z r (3 - r)
  TruncatedSeries bracket = sub(scale(power(r, p - 1), a), scale(power(r, p), b));
  return mul(z, bracket);
}

}  // namespace minbu
