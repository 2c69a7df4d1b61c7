#pragma once

#include <string>
#include <vector>

#include "minbu/series/radical_series.hpp"
#include "minbu/series/truncated_series.hpp"

namespace minbu {

// h_l(4/27) = 9(2l+3)/((l+1)^2 (l+2)^2)
BigRational h_critical(int l);
// D_l, the eta^{3/2} amplitude of H_l
BigRational singular_amplitude_DH(int l);
// A_l = 16(2l+3)/((l+1)^2 (l+2)^2)
BigRational A_closed(int l);

// A-hat(t) = sum_{l>=1} A_l t^{l-1}, built from Li2 and checked against A_closed
TruncatedSeries A_H_series(int order);

// sqrt(3) D-hat^(e)(t) and sqrt(3) D-hat^(g)(t) as exact rational series
TruncatedSeries sqrt3_De_hat(int order);
TruncatedSeries sqrt3_Dg_hat(int order);
// D-hat^(e)(t) with its 3^{-1/2}
RadicalScaledSeries De_hat(int order);
RadicalScaledSeries Dg_hat(int order);

struct MeanProfile {
  std::vector<BigRational> V;  // V[l-1] = <V_l>
  std::vector<BigRational> E;  // E[l-1] = <E_l>
};
MeanProfile mean_profile_rooted(int l_max, int order);
// <E_l> for pointed maps, l = 1..l_max
std::vector<BigRational> mean_profile_pointed(int l_max, int order);

// P_l(k), 0 <= k <= k_max
std::vector<BigRational> kernel_size_law(int l, int k_max);
BigRational same_minbu_probability(int l);
BigRational minbu_two_point(int l);

BigRational w_law(int m);           // (16/81)(m+1)(5/9)^m
BigRational wp_law(int m);          // (4/9)(5/9)^m
BigRational pi_closed(int D);       // 4(5+2D)/((D+2)^2 (D+3)^2)
// P(0..d_max) from 1 - 16/(9 A-hat)
std::vector<BigRational> first_neck_law(int d_max);

struct RationalLaw {
  std::string law_id;
  std::string domain;
  std::vector<BigRational> values;  // values[i] at domain index i (offset by `first`)
  int first = 0;
};

struct MinbuLaws {
  RationalLaw w, wp, P, pi;
};
// builds the laws and checks wp*wp = w, pi = A_{D+1}/4 = closed form, the
// geometric normalizations, and pi-hat = (4/9)/(1 - P-hat); throws VerificationFailure
MinbuLaws neck_and_mother_laws(int m_max, int d_max, int D_max, int order);

// tabulated law by id for the command line
RationalLaw tabulate_law(const std::string& law_id, int first, int last);

struct NumericConstants {
  double sum_P = 0;            // exact 5/9 rendered
  double sum_P_partial = 0;    // truncated float sum
  double mean_first_neck = 0;  // sum d P / sum P with tail correction
  double mean_mother_distance = 0;
  double mean_first_neck_target = 0;
  double mean_mother_distance_target = 0;
  int terms = 0;
};
// float series inversion of A-hat over `terms` coefficients
NumericConstants numeric_minbu_constants(int terms);

struct AmplitudeEstimate {
  double estimate = 0;
  double target = 0;  // 2/(9 sqrt(3 pi))
  std::vector<double> raw;  // a_n at the extrapolation nodes
  double relative_error() const;
};
// p1|_{z^n} (4/27)^n n^{5/2} extrapolated in 1/n from exact coefficients up to N
AmplitudeEstimate p1_singular_amplitude(int order);

// h_l|_{z^k} (4/27)^k for k < terms, double precision
std::vector<double> h_scaled_coefficients(int l, int terms);

struct ExtrapolatedSum {
  std::vector<int> cutoffs;
  std::vector<double> partial;
  double value = 0;
};
// Richardson in 1/sqrt(K) over K in {100, 400, 1600, 6400}
ExtrapolatedSum kernel_mass_extrapolated(int l);       // -> same_minbu_probability(l)
ExtrapolatedSum minbu_two_point_extrapolated(int l);   // -> minbu_two_point(l)
ExtrapolatedSum h_critical_extrapolated(int l);        // -> h_critical(l)

}  // namespace minbu
