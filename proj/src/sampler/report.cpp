#include <locale>
#include <sstream>

#include <json.hpp>

#include "minbu/sampler/report.hpp"

namespace minbu {

namespace {

std::string fixed(double x) {
  std::ostringstream ss;
  ss.imbue(std::locale::classic());
  ss.precision(12);
  ss << x;
  return ss.str();
}

}  // namespace

std::string report_to_json(const ExperimentReport& r, bool include_runtime) {
  nlohmann::ordered_json j;
  j["experiment_id"] = r.experiment_id;
  j["n"] = r.n;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  if (r.experiment_id == "kernel-size" || r.experiment_id == "same-minbu") j["ell"] = r.ell;
  auto bins = nlohmann::ordered_json::array();
  auto theory = nlohmann::ordered_json::array();
  auto exact = nlohmann::ordered_json::array();
  for (const auto& b : r.bins) {
    nlohmann::ordered_json e;
    e["value"] = b.value;
    e["count"] = b.count;
    e["frequency"] = b.frequency;
    bins.push_back(e);
    theory.push_back(b.theory);
    exact.push_back(b.theory_exact);
  }
  j["bins"] = bins;
  j["theory"] = theory;
  j["theory_exact"] = exact;
  j["chi2"] = r.chi2;
  j["dof"] = r.dof;
  j["p_value"] = r.p_value;
  j["max_dev"] = r.max_dev;
  j["weight_total"] = r.weight_total;
  j["workers"] = r.workers;
  j["rng"] = r.rng_algorithm;
  if (r.sampler.attempts) j["sampler_acceptance"] = r.sampler.acceptance();
  if (include_runtime) j["runtime_ms"] = r.runtime_ms;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const ExperimentReport& r) {
  std::ostringstream ss;
  ss << "experiment_id,n,samples,seed,value,count,frequency,theory,theory_exact\n";
  for (const auto& b : r.bins) {
    ss << r.experiment_id << ',' << r.n << ',' << r.samples << ',' << r.seed << ',' << b.value << ',' << b.count
       << ',' << fixed(b.frequency) << ',' << fixed(b.theory) << ',' << b.theory_exact << '\n';
  }
  return ss.str();
}

}  // namespace minbu
