#pragma once

// Run configuration: INI-style file ([section] key = value), every field
// overridable from the command line. Precedence: flag > file > default.

#include <cstdint>
#include <string>
#include <vector>

#include "hk/group_kernels.hpp"
#include "hk/quad.hpp"
#include "hk/validate.hpp"

namespace hk {

struct RunConfig {
  QuadratureSpec quadrature;
  Group group = Group::SL2R;
  std::vector<Method> methods;
  std::vector<double> ts, rs, angle_sums;
  std::string output_path;  // empty: stdout
  std::string format = "csv";
  std::string grid = "full";
  std::uint64_t seed = 1;
  bool strict = false;
  Sl2cWeight weight = Sl2cWeight::HarishChandra;
  McConfig mc;

  void validate() const;     // throws ConfigError
  std::string hash() const;  // FNV-1a of the canonical form, hex
  std::string canonical() const;
};

// keys: [quadrature] rel_tol abs_tol max_panels gl_order trunc_sigma
//       [grid] group methods t r theta_sum weight
//       [mc] n_paths n_steps step_scale vertical_scale
//       [output] path format seed strict
// Unknown keys are rejected.
void load_config_file(const std::string& path, RunConfig& cfg);

// comma list of reals; a token may be a multiple of pi: "pi", "pi/2", "3pi/2", "0.5pi"
std::vector<double> parse_real_list(const std::string& s);
std::vector<Method> parse_method_list(const std::string& s);

}  // namespace hk
