#include <algorithm>

#include "minbu/errors.hpp"
#include "minbu/local/laws.hpp"

namespace minbu {

namespace {

void fail(const std::string& law, int index, const BigRational& got, const BigRational& want) {
  throw VerificationFailure(law + " at index " + std::to_string(index) + ": " + to_fraction(got) + " vs " +
                            to_fraction(want));
}

TruncatedSeries first_neck_series(int order) {
  auto a = A_H_series(order);
  auto one = TruncatedSeries::one(order, Variable::t);
  return sub(one, div(TruncatedSeries::constant(rational(16, 9), order, Variable::t), a));
}

}  // namespace

std::vector<BigRational> first_neck_law(int d_max) {
  if (d_max < 0) throw DomainError("d_max must be >= 0");
  auto p = first_neck_series(d_max);
  return std::vector<BigRational>(p.coefficients().begin(), p.coefficients().end());
}

MinbuLaws neck_and_mother_laws(int m_max, int d_max, int D_max, int order) {
  if (m_max < 0 || d_max < 0 || D_max < 0) throw DomainError("law ranges must be >= 0");
  if (order < std::max(d_max, D_max)) throw DomainError("order must cover d_max and D_max");
  MinbuLaws laws;
  laws.w = {"neck_count", "m", {}, 0};
  laws.wp = {"reach_mother", "m", {}, 0};
  for (int m = 0; m <= m_max; ++m) {
    laws.w.values.push_back(w_law(m));
    laws.wp.values.push_back(wp_law(m));
  }
  // wp * wp = w
  for (int m = 0; m <= m_max; ++m) {
    BigRational s;
    for (int a = 0; a <= m; ++a) s += laws.wp.values[static_cast<size_t>(a)] * laws.wp.values[static_cast<size_t>(m - a)];
    if (s != laws.w.values[static_cast<size_t>(m)]) fail("wp*wp = w", m, s, laws.w.values[static_cast<size_t>(m)]);
  }
  // geometric sums: sum (4/9) q^m = (4/9)/(1-q); sum (16/81)(m+1) q^m = (16/81)/(1-q)^2
  BigRational q = rational(5, 9);
  BigRational s1 = rational(4, 9) / (1 - q);
  BigRational s2 = rational(16, 81) / ((1 - q) * (1 - q));
  if (s1 != 1) fail("sum wp", -1, s1, BigRational(1));
  if (s2 != 1) fail("sum w", -1, s2, BigRational(1));

  auto a = A_H_series(order);
  auto p = first_neck_series(order);
  laws.P = {"first_neck", "d", {}, 0};
  for (int d = 0; d <= d_max; ++d) laws.P.values.push_back(p[d]);
  laws.pi = {"mother_distance", "D", {}, 0};
  for (int D = 0; D <= D_max; ++D) {
    BigRational from_series = a[D] / 4;
    BigRational closed = pi_closed(D);
    if (from_series != closed) fail("pi(D) = A_{D+1}/4", D, from_series, closed);
    laws.pi.values.push_back(closed);
  }
  // pi-hat = (4/9) / (1 - P-hat), checked as (1 - P-hat) pi-hat = 4/9
  auto one = TruncatedSeries::one(order, Variable::t);
  auto lhs = mul(sub(one, p), scale(a, rational(1, 4)));
  for (int D = 0; D <= order; ++D) {
    BigRational want = D == 0 ? rational(4, 9) : BigRational(0);
    if (lhs[D] != want) fail("(1 - P-hat) pi-hat = 4/9", D, lhs[D], want);
  }
  // sum_l A_l telescopes: A_l = 16 (1/(l+1)^2 - 1/(l+2)^2), total 4, hence sum_d P(d) = 1 - 16/36
  for (int l = 1; l <= order + 1; ++l) {
    BigRational tel = 16 * (rational(1, (l + 1) * (l + 1)) - rational(1, (l + 2) * (l + 2)));
    if (tel != A_closed(l)) fail("A_l telescoping form", l, A_closed(l), tel);
  }
  return laws;
}

RationalLaw tabulate_law(const std::string& id, int first, int last) {
  if (first < 0 || last < first) throw DomainError("invalid law range");
  RationalLaw law;
  law.law_id = id;
  law.first = first;
  auto each = [&](auto fn) {
    for (int i = first; i <= last; ++i) law.values.push_back(fn(i));
  };
  if (id == "pi-d") {
    law.domain = "D";
    each(pi_closed);
  } else if (id == "first-neck") {
    law.domain = "d";
    auto p = first_neck_law(last);
    law.values.assign(p.begin() + first, p.end());
  } else if (id == "neck-count") {
    law.domain = "m";
    each(w_law);
  } else if (id == "reach-mother") {
    law.domain = "m";
    each(wp_law);
  } else if (id == "h-crit") {
    law.domain = "l";
    each(h_critical);
  } else if (id == "d-h") {
    law.domain = "l";
    each(singular_amplitude_DH);
  } else if (id == "a-h") {
    law.domain = "l";
    each(A_closed);
  } else if (id == "same-minbu") {
    law.domain = "l";
    each(same_minbu_probability);
  } else if (id == "minbu-two-point") {
    law.domain = "l";
    each(minbu_two_point);
  } else if (id == "mean-profile-v" || id == "mean-profile-e") {
    law.domain = "l";
    if (first < 1) throw DomainError("profiles start at l = 1");
    auto prof = mean_profile_rooted(last, last - 1);
    const auto& src = id == "mean-profile-v" ? prof.V : prof.E;
    law.values.assign(src.begin() + (first - 1), src.end());
  } else if (id == "mean-profile-pointed") {
    law.domain = "l";
    if (first < 1) throw DomainError("profiles start at l = 1");
    auto prof = mean_profile_pointed(last, last - 1);
    law.values.assign(prof.begin() + (first - 1), prof.end());
  } else {
    throw DomainError("unknown law '" + id + "'");
  }
  return law;
}

}  // namespace minbu
