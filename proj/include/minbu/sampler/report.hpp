#pragma once

#include <string>

#include "minbu/sampler/experiment.hpp"

namespace minbu {

// JSON keys: experiment_id, n, samples, seed, bins, theory, chi2, dof, max_dev,
// runtime_ms, plus p_value, theory_exact, workers, weight_total, ell
std::string report_to_json(const ExperimentReport& r, bool include_runtime = true);
// header row, then one row per bin
std::string report_to_csv(const ExperimentReport& r);

}  // namespace minbu
