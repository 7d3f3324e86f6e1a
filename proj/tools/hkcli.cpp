// hkcli: evaluate heat kernels on grids, run check suites, run Monte Carlo.
//
// Exit codes: 0 ok, 1 check failure, 2 usage/config error, 3 non-convergence
// under --strict, 4 budget exhaustion.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hk/config.hpp"
#include "hk/errors.hpp"
#include "hk/group_kernels.hpp"
#include "hk/lie2.hpp"
#include "hk/suites.hpp"

using namespace hk;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kCheckFail = 1, kUsage = 2, kNotConverged = 3, kBudget = 4;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json mat_json(const Mat2& m) {
  auto c = [](cplx z) { return json::array({z.real(), z.imag()}); };
  return json::array({json::array({c(m.a), c(m.b)}), json::array({c(m.c), c(m.d)})});
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output '" + path + "'");
  out << text;
}

struct Flags {
  std::string group, method, t, r, theta_sum, config, out, format, grid;
  std::uint64_t seed = 0;
  bool seed_set = false, strict = false;
  double rel_tol = 0, abs_tol = 0, trunc_sigma = 0;
  int max_panels = 0, gl_order = 0;
  long n_paths = 0;
  int n_steps = 0;
  double step_scale = 0, vertical_scale = 0;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "INI config file");
  cmd->add_option("--out", f.out, "output path (default stdout)");
  cmd->add_option("--format", f.format, "csv | json");
  cmd->add_option("--seed", f.seed, "RNG seed")->each([&f](const std::string&) { f.seed_set = true; });
  cmd->add_option("--rel_tol", f.rel_tol, "quadrature relative tolerance");
  cmd->add_option("--abs_tol", f.abs_tol, "quadrature absolute tolerance");
  cmd->add_option("--max_panels", f.max_panels, "adaptive panel budget");
  cmd->add_option("--gl_order", f.gl_order, "Gauss-Legendre order");
  cmd->add_option("--trunc_sigma", f.trunc_sigma, "Gaussian tail truncation in widths");
}

// flag > file > default
RunConfig resolve(const Flags& f) {
  RunConfig cfg;
  if (!f.config.empty()) load_config_file(f.config, cfg);
  if (!f.group.empty()) cfg.group = parse_group(f.group);
  if (!f.method.empty()) cfg.methods = parse_method_list(f.method);
  if (!f.t.empty()) cfg.ts = parse_real_list(f.t);
  if (!f.r.empty()) cfg.rs = parse_real_list(f.r);
  if (!f.theta_sum.empty()) cfg.angle_sums = parse_real_list(f.theta_sum);
  if (!f.out.empty()) cfg.output_path = f.out;
  if (!f.format.empty()) cfg.format = f.format;
  if (!f.grid.empty()) cfg.grid = f.grid;
  if (f.seed_set) cfg.seed = f.seed;
  if (f.strict) cfg.strict = true;
  if (f.rel_tol > 0) cfg.quadrature.rel_tol = f.rel_tol;
  if (f.abs_tol > 0) cfg.quadrature.abs_tol = f.abs_tol;
  if (f.max_panels > 0) cfg.quadrature.max_panels = f.max_panels;
  if (f.gl_order > 0) cfg.quadrature.gl_order = f.gl_order;
  if (f.trunc_sigma > 0) cfg.quadrature.trunc_sigma = f.trunc_sigma;
  if (f.n_paths > 0) cfg.mc.n_paths = f.n_paths;
  if (f.n_steps > 0) cfg.mc.n_steps = f.n_steps;
  if (f.step_scale > 0) cfg.mc.step_scale = f.step_scale;
  if (f.vertical_scale > 0) cfg.mc.vertical_scale = f.vertical_scale;
  cfg.validate();
  return cfg;
}

int cmd_decomp(const std::string& group, const std::vector<double>& v) {
  const Group g = parse_group(group);
  Mat2 m;
  if (v.size() == 4) {
    m = {v[0], v[1], v[2], v[3]};
  } else if (v.size() == 8) {
    m = {cplx(v[0], v[1]), cplx(v[2], v[3]), cplx(v[4], v[5]), cplx(v[6], v[7])};
  } else {
    throw ConfigError("decomp needs 4 real entries or 8 numbers (re im per entry), row-major");
  }
  const GroupElement x = make_element(m, g);
  json out = {{"group", group_name(g)}, {"input", mat_json(x.m)}, {"polar_height", polar_height(x)}};
  if (g == Group::SL2R || g == Group::SL2C) {
    const IwasawaNAK iw = iwasawa_nak(x);
    out["iwasawa"] = {{"n", mat_json(iw.n.m)}, {"a_log", iw.a_log}, {"k", mat_json(iw.k.m)}};
  }
  const CartanKAK c = cartan_kak(x);
  out["cartan"] = {{"r", c.r},
                   {"largest_singular_value", std::exp(0.5 * c.r)},
                   {"k_prod", mat_json(c.k_prod.m)},
                   {"conj", mat_json(c.conj.m)}};
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_kernel(const Flags& f) {
  RunConfig cfg = resolve(f);
  if (cfg.methods.empty()) throw ConfigError("no methods given (--method)");
  if (cfg.ts.empty()) cfg.ts = {1.0};
  if (cfg.rs.empty()) cfg.rs = {0.0};
  if (cfg.angle_sums.empty()) cfg.angle_sums = {0.0};
  for (Method m : cfg.methods)
    if (method_group(m) != cfg.group)
      throw ConfigError("method " + method_name(m) + " does not apply to group " + group_name(cfg.group));
  KernelOptions opt;
  opt.spec = cfg.quadrature;
  opt.weight = cfg.weight;
  const GridSpec grid{cfg.group, cfg.methods, cfg.ts, cfg.rs, cfg.angle_sums};
  const auto rows = evaluate_grid(grid, opt, Exec::Parallel);
  bool all_converged = true;
  std::ostringstream o;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      arr.push_back({{"group", group_name(row.group)}, {"method", method_name(row.method)}, {"t", row.t},
                     {"r", row.r}, {"angle_sum", row.angle_sum}, {"value", row.result.value},
                     {"err_est", row.result.err_est}, {"converged", row.result.converged}});
      all_converged = all_converged && row.result.converged;
    }
    o << json{{"version", kVersion}, {"config_hash", cfg.hash()}, {"rows", arr}}.dump(2) << "\n";
  } else {
    o << "group,method,t,r,angle_sum,value,err_est,converged\n";
    for (const auto& row : rows) {
      o << group_name(row.group) << ',' << method_name(row.method) << ',' << fmt17(row.t) << ',' << fmt17(row.r)
        << ',' << fmt17(row.angle_sum) << ',' << fmt17(row.result.value) << ',' << fmt17(row.result.err_est) << ','
        << (row.result.converged ? "true" : "false") << '\n';
      all_converged = all_converged && row.result.converged;
    }
  }
  emit(cfg.output_path, o.str());
  if (cfg.strict && !all_converged) return kNotConverged;
  return kOk;
}

// the suites keep their own seed unless one is given
SuiteOptions suite_options(const RunConfig& cfg, const Flags& f) {
  SuiteOptions s;
  s.spec = cfg.quadrature;
  s.small = cfg.grid == "small";
  if (f.seed_set) s.seed = cfg.seed;
  s.mc_paths = cfg.mc.n_paths;
  s.mc_steps = cfg.mc.n_steps;
  return s;
}

int cmd_check(const std::string& suite, const Flags& f) {
  const RunConfig cfg = resolve(f);
  const CheckReport rep = run_suite(suite, suite_options(cfg, f));
  emit(cfg.output_path, to_json(rep, cfg.hash()).dump(2) + "\n");
  return rep.pass ? kOk : kCheckFail;
}

int cmd_mc(const Flags& f) {
  RunConfig cfg = resolve(f);
  SuiteOptions s = suite_options(cfg, f);
  if (f.step_scale > 0) s.mc_step_scale = f.step_scale;
  if (f.vertical_scale > 0) s.mc_vertical_scale = f.vertical_scale;
  const CheckReport rep = run_suite("mc", s);
  std::ostringstream o;
  o << "F,mc_mean,mc_stderr,quad_value,z_score\n";
  // F = 1: mass of the subelliptic kernel under the calibrated Haar measure
  const double mass = rep.details["kernel_mass"].get<double>() / kSubellipticToMain;
  o << "one,1,0," << fmt17(mass) << ",0\n";
  double worst = 0.0;
  for (const auto& row : rep.details["rows"]) {
    o << row["F"].get<std::string>() << ',' << fmt17(row["mc_mean"]) << ',' << fmt17(row["mc_stderr"]) << ','
      << fmt17(row["quad_value"]) << ',' << fmt17(row["z_score"]) << '\n';
    worst = std::max(worst, row["z_score"].get<double>());
  }
  emit(cfg.output_path, o.str());
  return worst > 4.0 ? kCheckFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heat kernels on SL(2,R), SL(2,C), SO(2), SU(2)"};
  app.require_subcommand(1);
  Flags f;

  auto* decomp = app.add_subcommand("decomp", "print Iwasawa and Cartan factors as JSON");
  std::vector<double> entries;
  decomp->add_option("--group", f.group, "sl2r | sl2c | so2 | su2")->required();
  decomp->add_option("entries", entries, "row-major entries (8 numbers re,im for complex)")->required();

  auto* kernel = app.add_subcommand("kernel", "evaluate kernels on a grid, CSV rows");
  kernel->add_option("--group", f.group, "sl2r | sl2c");
  kernel->add_option("--method", f.method, "comma list: main, subelliptic, via_sl2c, sl2c");
  kernel->add_option("--t", f.t, "comma list of times");
  kernel->add_option("--r", f.r, "comma list of radial parameters");
  kernel->add_option("--theta-sum", f.theta_sum, "comma list of angle sums (pi allowed)");
  kernel->add_flag("--strict", f.strict, "exit 3 when a point did not converge");
  add_common(kernel, f);

  auto* check = app.add_subcommand("check", "run a named check suite, JSON report");
  std::string suite;
  std::string names;
  for (const auto& n : suite_names()) names += (names.empty() ? "" : " | ") + n;
  check->add_option("suite", suite, names)->required();
  check->add_option("--grid", f.grid, "small | full");
  add_common(check, f);

  auto* mc = app.add_subcommand("mc", "Monte Carlo expectations against quadrature, CSV");
  mc->add_option("--n_paths", f.n_paths, "number of paths");
  mc->add_option("--n_steps", f.n_steps, "steps per path");
  mc->add_option("--step_scale", f.step_scale, "generator scale of the p-directions (default: fitted)");
  mc->add_option("--vertical_scale", f.vertical_scale, "generator scale of the k-direction (default: fitted)");
  add_common(mc, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*decomp) return cmd_decomp(f.group, entries);
    if (*kernel) return cmd_kernel(f);
    if (*check) {
      const auto& all = suite_names();
      if (std::find(all.begin(), all.end(), suite) == all.end()) {
        std::cerr << "unknown suite '" << suite << "'\n" << check->help();
        return kUsage;
      }
      return cmd_check(suite, f);
    }
    if (*mc) return cmd_mc(f);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const NonConvergence& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
