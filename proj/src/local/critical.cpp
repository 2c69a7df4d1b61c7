#include "minbu/errors.hpp"
#include "minbu/ladder/ladder.hpp"
#include "minbu/local/laws.hpp"

namespace minbu {

namespace {

void require_l(int l) {
  if (l < 1) throw DomainError("l must be >= 1, got " + std::to_string(l));
}

BigInt big(long v) { return BigInt(v); }

BigRational quartic_ratio_denominator(int l) {
  // 5l^4 + 30l^3 + 67l^2 + 66l + 28
  BigInt L = big(l);
  return BigRational(5 * L * L * L * L + 30 * L * L * L + 67 * L * L + 66 * L + 28);
}

}  // namespace

BigRational h_critical(int l) {
  require_l(l);
  BigInt L = big(l);
  return rational(9 * (2 * L + 3), (L + 1) * (L + 1) * (L + 2) * (L + 2));
}

BigRational singular_amplitude_DH(int l) {
  require_l(l);
  BigInt L = big(l);
  BigRational num = BigRational(8 * L * (L + 3) * (2 * L + 3)) * quartic_ratio_denominator(l);
  BigRational den = BigRational(35 * (L + 1) * (L + 1) * (L + 2) * (L + 2));
  return num / den;
}

BigRational A_closed(int l) {
  require_l(l);
  BigInt L = big(l);
  return rational(16 * (2 * L + 3), (L + 1) * (L + 1) * (L + 2) * (L + 2));
}

BigRational same_minbu_probability(int l) {
  require_l(l);
  BigInt L = big(l);
  return BigRational(14 * (L * L + 3 * L + 4)) / quartic_ratio_denominator(l);
}

BigRational minbu_two_point(int l) {
  require_l(l);
  BigInt L = big(l);
  return rational(6 * L * (L + 3) * (2 * L + 3) * (L * L + 3 * L + 4), 5 * (L + 1) * (L + 1) * (L + 2) * (L + 2));
}

BigRational w_law(int m) {
  if (m < 0) throw DomainError("m must be >= 0");
  return rational(16, 81) * (m + 1) * pow(rational(5, 9), static_cast<unsigned long>(m));
}

BigRational wp_law(int m) {
  if (m < 0) throw DomainError("m must be >= 0");
  return rational(4, 9) * pow(rational(5, 9), static_cast<unsigned long>(m));
}

BigRational pi_closed(int D) {
  if (D < 0) throw DomainError("D must be >= 0");
  BigInt d = big(D);
  return rational(4 * (5 + 2 * d), (d + 2) * (d + 2) * (d + 3) * (d + 3));
}

std::vector<BigRational> kernel_size_law(int l, int k_max) {
  require_l(l);
  if (k_max < 0) throw DomainError("k_max must be >= 0");
  int order = std::max(k_max, 1);
  LadderFamily r = compute_r_family(std::max(l + 1, 2), order);
  MarkedFamilies m = derive_marked_families(r);
  const TruncatedSeries& h = m.h[l];
  BigRational pre = rational(64, 9) / singular_amplitude_DH(l);
  std::vector<BigRational> out(static_cast<size_t>(k_max) + 1);
  BigRational x = 1;
  for (int k = 0; k <= k_max; ++k) {
    out[static_cast<size_t>(k)] = pre * h[k] * (k + 1) * x;
    x *= rational(4, 27);
  }
  return out;
}

}  // namespace minbu
