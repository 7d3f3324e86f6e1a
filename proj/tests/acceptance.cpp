// Acceptance runner: one pass/fail line per criterion, notes below it.
//
//   acceptance                 all criteria
//   acceptance --criterion 6   a single one
//   acceptance --json out.json also writes the full reports

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "hk/suites.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;  // all must pass
  double limit_s;
};

const std::vector<Criterion> kCriteria{
    {1, "decomposition reconstruction", {"decomp"}, 1.0},
    {2, "cocycle identity", {"cocycle"}, 1.0},
    {3, "theta inversion and Chebyshev derivative", {"specfun"}, 5.0},
    {4, "SO(2) series vs SU(2) integral", {"compact"}, 30.0},
    {5, "heat Gaussian three routes", {"gaussians"}, 60.0},
    {6, "MAIN vs SUBELLIPTIC", {"compare"}, 600.0},
    {7, "VIA_SL2C vs consensus", {"via"}, 900.0},
    {8, "heat-equation residual", {"pde"}, 300.0},
    {9, "Haar normalization and concentration", {"norm", "delta"}, 60.0},
    {10, "Monte Carlo vs quadrature", {"mc"}, 120.0},
    {11, "SL(2,C) Plancherel weight", {"plancherel"}, 60.0},
};

bool run(const Criterion& c, nlohmann::json& sink) {
  bool pass = true;
  double seconds = 0.0;
  std::vector<std::string> lines;
  for (const auto& name : c.suites) {
    const hk::CheckReport rep = hk::run_suite(name, hk::SuiteOptions{});
    seconds += rep.seconds;
    pass = pass && rep.pass;
    char buf[200];
    std::snprintf(buf, sizeof buf, "  %s: %s worst %.3e tol %.1e (%.2f s)", name.c_str(), rep.pass ? "pass" : "fail",
                  rep.worst_case, rep.tolerance, rep.seconds);
    lines.push_back(buf);
    for (const auto& n : rep.notes) lines.push_back("    note: " + n);
    sink.push_back(hk::to_json(rep, "acceptance"));
  }
  const bool in_time = seconds < c.limit_s;
  const bool ok = pass && in_time;
  std::printf("criterion %d (%s): %s  [%.2f s, limit %.0f s%s]\n", c.id, c.title, ok ? "PASS" : "FAIL", seconds,
              c.limit_s, in_time ? "" : ", over time");
  for (const auto& l : lines) std::printf("%s\n", l.c_str());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  std::string json_out;
  app.add_option("--criterion", only, "criterion number (1-11); 0 runs all")->check(CLI::Range(0, 11));
  app.add_option("--json", json_out, "write full reports to this file");
  CLI11_PARSE(app, argc, argv);

  nlohmann::json sink = nlohmann::json::array();
  int failed = 0;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    try {
      if (!run(c, sink)) ++failed;
    } catch (const std::exception& e) {
      std::printf("criterion %d (%s): FAIL  [error: %s]\n", c.id, c.title, e.what());
      ++failed;
    }
  }
  if (!json_out.empty()) std::ofstream(json_out) << sink.dump(2) << "\n";
  return failed == 0 ? 0 : 1;
}
