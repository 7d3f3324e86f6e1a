#pragma once

// Named check suites shared by `hkcli check` and the acceptance binary. Each
// returns a report; none throws on a failed comparison.

#include <json.hpp>
#include <string>
#include <vector>

#include "hk/quad.hpp"

namespace hk {

inline constexpr const char* kVersion = "0.3.0";

struct CheckReport {
  std::string check;
  std::string group;
  nlohmann::json grid = nlohmann::json::object();
  double tolerance = 0.0;
  double worst_case = 0.0;
  nlohmann::json fitted_constants = nlohmann::json::object();
  bool pass = false;
  nlohmann::json details = nlohmann::json::object();
  std::vector<std::string> notes{};  // human-readable diagnostics
  double seconds = 0.0;
};

nlohmann::json to_json(const CheckReport& r, const std::string& config_hash);

struct SuiteOptions {
  QuadratureSpec spec;
  bool small = false;  // reduced grid for quick runs
  std::uint64_t seed = 20240611;
  Exec exec = Exec::Parallel;
  long mc_paths = 100000;
  int mc_steps = 200;
  double mc_step_scale = 0.0;      // <= 0: fitted from the heat residual
  double mc_vertical_scale = 0.0;  // <= 0: fitted
};

// decomp cocycle specfun compact gaussians compare via pde norm delta mc plancherel
const std::vector<std::string>& suite_names();
CheckReport run_suite(const std::string& name, const SuiteOptions& opt = {});  // ConfigError if unknown

}  // namespace hk
