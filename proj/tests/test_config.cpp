#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hk/config.hpp"
#include "hk/errors.hpp"
#include "hk/suites.hpp"

using namespace hk;

TEST_SUITE("config") {

TEST_CASE("real lists accept multiples of pi") {
  const auto v = parse_real_list("0, pi/2, pi, 3pi/2, 0.5*pi, 2");
  REQUIRE(v.size() == 6);
  CHECK(v[1] == doctest::Approx(M_PI / 2));
  CHECK(v[3] == doctest::Approx(1.5 * M_PI));
  CHECK(v[4] == doctest::Approx(M_PI / 2));
  CHECK(v[5] == 2.0);
  CHECK_THROWS_AS(parse_real_list("1, two"), ConfigError);
}

TEST_CASE("config file: known keys load, unknown keys fail") {
  const std::string good = "hk_test_good.ini", bad = "hk_test_bad.ini";
  std::ofstream(good) << "[grid]\ngroup = sl2c\nmethods = sl2c\nt = 0.5, 1\n[quadrature]\nrel_tol = 1e-7\n";
  std::ofstream(bad) << "[grid]\ncolour = blue\n";
  RunConfig cfg;
  load_config_file(good, cfg);
  CHECK(cfg.group == Group::SL2C);
  CHECK(cfg.ts.size() == 2);
  CHECK(cfg.quadrature.rel_tol == 1e-7);
  RunConfig other;
  CHECK_THROWS_AS(load_config_file(bad, other), ConfigError);
  std::remove(good.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("config hash is stable and sensitive") {
  RunConfig a, b;
  CHECK(a.hash() == b.hash());
  b.seed = 2;
  CHECK(a.hash() != b.hash());
  CHECK(a.hash().size() == 16);
}

TEST_CASE("suites: registry and a cheap suite") {
  CHECK(suite_names().size() == 12);
  CHECK_THROWS_AS(run_suite("nope"), ConfigError);
  const CheckReport r = run_suite("cocycle");
  CHECK(r.pass);
  CHECK(to_json(r, "x")["version"] == kVersion);
}

}
