#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minbu/sampler/samplers.hpp"
#include "minbu/series/big_rational.hpp"

namespace minbu {

// mother-distance, necks-to-mother, root-label-profile, kernel-size, same-minbu
const std::vector<std::string>& experiment_ids();

struct ExperimentConfig {
  std::string id;
  int n = 100;
  long long samples = 1000;
  std::uint64_t seed = 1;
  int workers = 0;  // 0: one per logical core
  int ell = 1;      // distance for kernel-size and same-minbu
  int max_value = -1;  // last explicit bin, -1 for the per-experiment default
  RootedMethod method = RootedMethod::sign;
};

// Budget: n <= 10^6, samples * n <= 10^11, and n <= 400 for the root-label
// profile (its law comes from exact coefficients). ResourceError otherwise.
void check_experiment_budget(const ExperimentConfig& config);

struct ExperimentBin {
  long value = 0;  // -1 for the overflow bin
  long long count = 0;  // observations, or marked edges for the edge-weighted experiments
  double frequency = 0;
  double theory = 0;
  std::string theory_exact;
};

struct ExperimentReport {
  std::string experiment_id;
  int n = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  int ell = 1;
  std::vector<ExperimentBin> bins;
  // total weight behind the frequencies: samples, or marked edges
  long long weight_total = 0;
  bool edge_weighted = false;
  double chi2 = 0;
  int dof = 0;
  double p_value = 1;
  double max_dev = 0;
  double runtime_ms = 0;
  RootedSampleStats sampler;
  std::string rng_algorithm;

  double frequency(long value) const;
};

ExperimentReport run_experiment(const ExperimentConfig& config);

// finite-n law of the root label of a planted well-labeled tree, index l - 1
std::vector<BigRational> root_label_law(int n);

// Kernel size seen from the root edge of a uniform rooted map with n faces and a
// uniform marked edge of type (l-1) -> l, k = 0..k_max:
// h_l|_{z^k} [g^n] R1^2 (g R1^2)^k / H_l|_{g^n}. At l = 1 the ensemble holds the
// root edge twice, once as itself and once as the coincident marked edge.
std::vector<BigRational> kernel_size_law_finite(int l, int n, int k_max);

// Merges neighbouring bins until each group expects at least min_expected,
// returning group index per bin (the groups are contiguous).
std::vector<int> pool_bins(const std::vector<double>& expected, double min_expected = 10.0);
// upper tail of the chi-square distribution
double chi_square_p_value(double chi2, int dof);

}  // namespace minbu
