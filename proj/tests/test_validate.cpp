#include <doctest.h>

#include <cmath>

#include "hk/errors.hpp"
#include "hk/group_kernels.hpp"
#include "hk/validate.hpp"

using namespace hk;

TEST_SUITE("validate") {

TEST_CASE("calibrated heat Gaussian mass is t-independent") {
  for (Group g : {Group::SL2R, Group::SL2C}) {
    const HaarCalibration cal = calibrate_haar(g, 1.0);
    for (double t : {0.5, 2.0})
      CHECK(cartan_integrate(heat_gaussian(g, t), t, cal) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("Cartan integration of a radial function against sinh") {
  const HaarCalibration unit{Group::SL2R, 1.0, 0.0};
  const double v = cartan_integrate([](double r) { return std::exp(-3.0 * r); }, 1.0, unit);
  CHECK(v == doctest::Approx(1.0 / 8.0).epsilon(1e-9));  // int e^{-3r} sinh r dr
}

TEST_CASE("MAIN kernel solves dt = (1/2)(Z1^2 + Z2^2) + (3/2) Z3^2") {
  KernelOptions ko;
  ko.spec.rel_tol = 1e-13;
  const KernelFn f = [&](double t, const GroupElement& g) { return rho_sl2r_main(t, g, ko).value; };
  std::vector<ResidualPoint> pts;
  pts.push_back(heat_residual(f, 1.0, {rot(0.4) * a_half(0.6) * rot(0.3), Group::SL2R}, 1e-3, 1e-3, true));
  pts.push_back(heat_residual(f, 0.7, {rot(1.1) * a_half(1.3), Group::SL2R}, 1e-3, 1e-3, true));
  pts.push_back(heat_residual(f, 1.5, {a_half(0.9) * rot(-0.2), Group::SL2R}, 1e-3, 1e-3, true));
  const ResidualFit fit = fit_residuals(pts);
  CHECK(fit.worst_two < 1e-5);
  CHECK(fit.a_h == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(fit.a_v == doctest::Approx(1.5).epsilon(1e-4));
  CHECK(fit.worst_single > 1e-2);
}

TEST_CASE("Monte Carlo is reproducible and seed dependent") {
  McConfig cfg;
  cfg.n_paths = 200;
  cfg.n_steps = 20;
  cfg.seed = 99;
  const auto a = mc_brownian(Group::SL2R, 0.5, cfg, Exec::Serial);
  const auto b = mc_brownian(Group::SL2R, 0.5, cfg, Exec::Parallel);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(max_entry_diff(a[i].m, b[i].m) == 0.0);
  cfg.seed = 100;
  const auto c = mc_brownian(Group::SL2R, 0.5, cfg, Exec::Serial);
  CHECK(max_entry_diff(a[0].m, c[0].m) > 0.0);
  CHECK(splitmix64(1) != splitmix64(2));
}

TEST_CASE("Monte Carlo semigroup: two legs of t/2 match one leg of t") {
  McConfig cfg;
  cfg.n_paths = 20000;
  cfg.n_steps = 100;
  cfg.step_scale = 0.5;
  cfg.vertical_scale = 1.5;
  cfg.seed = 8;
  const double t = 1.0;
  const auto one = mc_brownian(Group::SL2R, t, cfg);
  McConfig half = cfg;
  half.n_steps = 50;
  half.seed = 9;
  const auto mid = mc_brownian(Group::SL2R, t / 2, half);
  half.seed = 10;
  const auto two = mc_brownian(Group::SL2R, t / 2, half, Exec::Parallel, &mid);
  const GroupFunction tr = [](const GroupElement& g) { return g.m.trace().real(); };
  const McEstimate e1 = mc_expectation(one, tr), e2 = mc_expectation(two, tr);
  CHECK(std::abs(e1.mean - e2.mean) <= 4.0 * std::hypot(e1.stderr_, e2.stderr_));
  // (1/2)(Z1^2 + Z2^2) + (3/2) Z3^2 acts on the trace by -1/8
  CHECK(std::abs(e1.mean - 2.0 * std::exp(-t / 8.0)) <= 4.0 * e1.stderr_ + 2e-3);
}

TEST_CASE("empty samples and bad configs throw") {
  CHECK_THROWS_AS(mc_expectation({}, [](const GroupElement&) { return 1.0; }), EmptySample);
  McConfig bad;
  bad.n_paths = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

}
