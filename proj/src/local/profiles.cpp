#include "minbu/errors.hpp"
#include "minbu/local/laws.hpp"

namespace minbu {

namespace {

// polynomial with integer coefficients, lowest degree first
TruncatedSeries poly(std::initializer_list<long> c, int order) {
  std::vector<BigRational> v(static_cast<size_t>(order) + 1);
  int i = 0;
  for (long x : c) {
    if (i > order) break;
    v[static_cast<size_t>(i++)] = x;
  }
  return TruncatedSeries(std::move(v), Variable::t);
}

TruncatedSeries one_minus_t_pow(int k, int order) { return power(poly({1, -1}, order), k); }

// B(t) = t(3t - 4) + 4(1 - t) Li2(t), valuation 3
TruncatedSeries profile_B(int order) {
  auto li2 = dilog_series(order);
  return add(poly({0, -4, 3}, order), scale(mul(poly({1, -1}, order), li2), BigRational(4)));
}

}  // namespace

TruncatedSeries A_H_series(int order) {
  if (order < 0) throw DomainError("order must be >= 0");
  int w = order + 3;
  auto li2 = dilog_series(w);
  auto t = poly({0, 1}, w);
  // 4(-3t^2 + 4t Li2 + 4t - 4 Li2) / t^3
  auto num = add(poly({0, 4, -3}, w), scale(sub(mul(t, li2), li2), BigRational(4)));
  auto a = div(scale(num, BigRational(4)), poly({0, 0, 0, 1}, w));
  for (int n = 0; n <= order; ++n) {
    if (a[n] != A_closed(n + 1)) {
      throw VerificationFailure("A-hat coefficient t^" + std::to_string(n) + ": " + to_fraction(a[n]) +
                                " vs closed form " + to_fraction(A_closed(n + 1)));
    }
  }
  return a;
}

TruncatedSeries sqrt3_De_hat(int order) {
  if (order < 0) throw DomainError("order must be >= 0");
  int w = order + 7;
  auto L = log_one_minus_series(w);
  auto li2 = dilog_series(w);
  auto t = poly({0, 1}, w);
  auto P1 = poly({12, -57, 128, -49, -13, 9}, w);
  auto P2 = poly({144, -900, 2610, -2292, 89, 554, -175}, w);
  auto P3 = poly({12, -66, 148, -103, 64, -33, 8}, w);
  auto first = mul(t, add(scale(mul(one_minus_t_pow(2, w), mul(L, P1)), BigRational(12)), mul(t, P2)));
  auto bracket = add(scale(mul(one_minus_t_pow(6, w), L), BigRational(12)), mul(t, P3));
  auto second = scale(mul(poly({1, -1}, w), mul(li2, bracket)), BigRational(12));
  auto num = mul(scale(poly({1, 1}, w), BigRational(4)), sub(first, second));
  auto B = profile_B(w);
  auto den = scale(mul(t, mul(one_minus_t_pow(4, w), mul(B, B))), BigRational(945));
  return div(num, den);
}

TruncatedSeries sqrt3_Dg_hat(int order) {
  if (order < 0) throw DomainError("order must be >= 0");
  int w = order + 6;
  auto li2 = dilog_series(w);
  auto t = poly({0, 1}, w);
  auto P4 = poly({24, -114, 236, -151, 35}, w);
  auto inner = sub(mul(t, P4), scale(mul(one_minus_t_pow(5, w), li2), BigRational(24)));
  auto num = scale(mul(poly({0, 0, 0, 1}, w), inner), BigRational(16));
  auto B = profile_B(w);
  auto den = scale(mul(one_minus_t_pow(4, w), mul(B, B)), BigRational(945));
  return div(num, den);
}

RadicalScaledSeries De_hat(int order) { return RadicalScaledSeries(sqrt3_De_hat(order), -1); }

RadicalScaledSeries Dg_hat(int order) { return RadicalScaledSeries(sqrt3_Dg_hat(order), -1); }

MeanProfile mean_profile_rooted(int l_max, int order) {
  if (l_max < 1) throw DomainError("l_max must be >= 1");
  if (l_max > order + 1) throw DomainError("l_max must not exceed order + 1");
  // <V_l> = delta_{l,1} + (27 sqrt3 / 8) D-hat^(e)|_{t^{l-1}}, and 27 sqrt3/8 = (81/8) 3^{-1/2}
  RadicalScalar pref{rational(81, 8), -1};
  auto V = pref * De_hat(order);
  auto E = pref * Dg_hat(order);
  MeanProfile out;
  for (int l = 1; l <= l_max; ++l) {
    BigRational d = l == 1 ? 1 : 0;
    out.V.push_back(d + V.rational_coefficient(l - 1));
    out.E.push_back(d + E.rational_coefficient(l - 1));
  }
  return out;
}

std::vector<BigRational> mean_profile_pointed(int l_max, int order) {
  if (l_max < 1) throw DomainError("l_max must be >= 1");
  if (l_max > order + 1) throw DomainError("l_max must not exceed order + 1");
  int n = order;
  // D-hat^(p) = D^(p1) + t/(1+t) D-hat^(e); D^(p1) = 8/(27 sqrt3) shares the 3^{-1/2}
  RadicalScalar dp1{rational(8, 27), -1};
  auto x = div(poly({0, 1}, n), poly({1, 1}, n));
  RadicalScaledSeries tail(mul(x, sqrt3_De_hat(n)), -1);
  RadicalScaledSeries dp = RadicalScaledSeries(TruncatedSeries::constant(dp1.rational_part, n, Variable::t), -1) + tail;
  std::vector<BigRational> out;
  for (int l = 1; l <= l_max; ++l) {
    // both carry 3^{-1/2}, so the ratio is rational
    out.push_back(4 * dp.rational_part()[l - 1] / dp1.rational_part);
  }
  return out;
}

}  // namespace minbu
