#include <cmath>
#include <numbers>

#include "minbu/errors.hpp"
#include "minbu/ladder/ladder.hpp"
#include "minbu/local/laws.hpp"
#include "minbu/simd/float_series.hpp"

namespace minbu {

namespace {

// polynomial through (x_i, y_i) evaluated at 0
double neville_at_zero(std::vector<double> x, std::vector<double> y) {
  size_t n = x.size();
  for (size_t m = 1; m < n; ++m) {
    for (size_t i = 0; i + m < n; ++i) {
      y[i] = (x[i + m] * y[i] - x[i] * y[i + 1]) / (x[i + m] - x[i]);
    }
  }
  return y[0];
}

// sum_{m >= M} 1/m^2
double inverse_square_tail(double M) { return 1.0 / M + 0.5 / (M * M) + 1.0 / (6.0 * M * M * M); }

constexpr int kCutoffs[] = {100, 400, 1600, 6400};

ExtrapolatedSum extrapolate(const std::vector<double>& terms) {
  ExtrapolatedSum out;
  std::vector<double> xs;
  double acc = 0;
  size_t k = 0;
  for (int K : kCutoffs) {
    for (; k < static_cast<size_t>(K); ++k) acc += terms[k];
    out.cutoffs.push_back(K);
    out.partial.push_back(acc);
    xs.push_back(1.0 / std::sqrt(static_cast<double>(K)));
  }
  out.value = neville_at_zero(xs, out.partial);
  return out;
}

}  // namespace

std::vector<double> h_scaled_coefficients(int l, int terms) {
  if (l < 1) throw DomainError("l must be >= 1");
  if (terms < 1) throw DomainError("terms must be >= 1");
  size_t len = static_cast<size_t>(terms + l + 2);
  // r in the scaled variable 27z/4
  std::vector<double> r(len);
  r[0] = 1.0;
  for (size_t n = 0; n + 1 < len; ++n) {
    double m = static_cast<double>(n);
    r[n + 1] = r[n] * (3 * m + 3) * (3 * m + 2) * (3 * m + 1) / ((2 * m + 3) * (2 * m + 2) * (m + 1)) * (4.0 / 27.0);
  }
  std::vector<std::vector<double>> rec(static_cast<size_t>(l) + 2);
  rec[0].assign(len, 0.0);
  rec[1].assign(len, 0.0);
  rec[1][0] = 1.0;
  auto rr = simd::series_product(r, r, len);
  rec[2].resize(len);
  for (size_t i = 0; i < len; ++i) rec[2][i] = 3 * r[i] - rr[i];
  rec[2][0] -= 1.0;
  for (int j = 2; j <= l; ++j) {
    // r_{j+1} = ((r_j - 1)/z) / (r_{j-1} r_j), one coefficient lost per step
    const auto& a = rec[static_cast<size_t>(j)];
    size_t n = a.size() - 1;
    std::vector<double> shifted(n);
    for (size_t i = 0; i < n; ++i) shifted[i] = a[i + 1] * (27.0 / 4.0);
    auto den = simd::series_product(rec[static_cast<size_t>(j - 1)], a, n);
    rec[static_cast<size_t>(j + 1)] = simd::series_product(shifted, simd::series_inverse(den, n), n);
  }
  size_t t = static_cast<size_t>(terms);
  std::vector<double> f(t);
  for (size_t i = 0; i < t; ++i) f[i] = rec[static_cast<size_t>(l + 1)][i] - rec[static_cast<size_t>(l - 1)][i];
  return simd::series_product(rec[static_cast<size_t>(l)], f, t);
}

ExtrapolatedSum kernel_mass_extrapolated(int l) {
  auto h = h_scaled_coefficients(l, kCutoffs[3]);
  double pre = 64.0 / (9.0 * to_double(singular_amplitude_DH(l)));
  for (size_t k = 0; k < h.size(); ++k) h[k] *= pre * static_cast<double>(k + 1);
  return extrapolate(h);
}

ExtrapolatedSum minbu_two_point_extrapolated(int l) {
  auto h = h_scaled_coefficients(l, kCutoffs[3]);
  for (size_t k = 0; k < h.size(); ++k) h[k] *= (8.0 / 3.0) * static_cast<double>(k + 1);
  return extrapolate(h);
}

ExtrapolatedSum h_critical_extrapolated(int l) { return extrapolate(h_scaled_coefficients(l, kCutoffs[3])); }

NumericConstants numeric_minbu_constants(int terms) {
  if (terms < 100) throw DomainError("need at least 100 terms");
  size_t K = static_cast<size_t>(terms);
  std::vector<double> a(K);
  for (size_t d = 0; d < K; ++d) {
    double l = static_cast<double>(d + 1);
    a[d] = 16.0 * (2 * l + 3) / ((l + 1) * (l + 1) * (l + 2) * (l + 2));
  }
  auto inv = simd::series_inverse(a, K);
  NumericConstants c;
  c.terms = terms;
  c.sum_P = 5.0 / 9.0;
  double sum_p = 0, sum_dp = 0;
  for (size_t d = 0; d < K; ++d) {
    double p = (d == 0 ? 1.0 : 0.0) - (16.0 / 9.0) * inv[d];
    sum_p += p;
    sum_dp += static_cast<double>(d) * p;
  }
  double k = static_cast<double>(K);
  // P(d) ~ 32/(9 d^3)
  c.sum_P_partial = sum_p + (16.0 / 9.0) / (k * k);
  c.mean_first_neck = (sum_dp + (32.0 / 9.0) * inverse_square_tail(k)) / c.sum_P;

  double sum_dpi = 0;
  for (size_t D = 0; D < K; ++D) {
    double x = static_cast<double>(D);
    sum_dpi += x * 4.0 * (5 + 2 * x) / ((x + 2) * (x + 2) * (x + 3) * (x + 3));
  }
  // sum_{D>=K} D pi(D) = 4 (K/(K+2)^2 + sum_{m>=K+3} 1/m^2)
  c.mean_mother_distance = sum_dpi + 4.0 * (k / ((k + 2) * (k + 2)) + inverse_square_tail(k + 3));
  double pi2 = std::numbers::pi * std::numbers::pi;
  c.mean_mother_distance_target = 2 * pi2 / 3 - 5;
  c.mean_first_neck_target = 0.8 * c.mean_mother_distance_target;
  return c;
}

double AmplitudeEstimate::relative_error() const { return std::abs(estimate - target) / target; }

AmplitudeEstimate p1_singular_amplitude(int order) {
  if (order < 100) throw DomainError("order must be >= 100");
  auto r = bulk_r(order);
  auto z = TruncatedSeries::monomial(1, BigRational(1), order, Variable::z);
  auto p1 = mul(mul(z, r), sub(TruncatedSeries::constant(BigRational(3), order), r));
  AmplitudeEstimate est;
  est.target = 2.0 / (9.0 * std::sqrt(3.0 * std::numbers::pi));
  std::vector<double> xs;
  // nodes spread over [N/2, N]
  for (int j = 0; j <= 4; ++j) {
    int n = order / 2 + j * order / 8;
    double v = to_double(p1[n] * pow(rational(4, 27), static_cast<unsigned long>(n))) * std::pow(n, 2.5);
    est.raw.push_back(v);
    xs.push_back(1.0 / n);
  }
  est.estimate = neville_at_zero(xs, est.raw);
  return est;
}

}  // namespace minbu
