#pragma once

#include <functional>
#include <string>
#include <vector>

namespace minbu::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyConfig {
  int order = 30;
  int l_max = 20;
  int enum_max = 6;     // exhaustive oracle up to this n
  int random_maps = 200;
  int random_n = 50;
  unsigned long long seed = 1;
};

const std::vector<std::string>& suite_names();  // algebra, local, codec, enumeration, scaling
// runs one suite or "all"; each check reports instead of throwing
std::vector<CheckResult> run_suites(const std::string& suite, const VerifyConfig& config,
                                    const std::function<void(const CheckResult&)>& progress = {});

}  // namespace minbu::cli
