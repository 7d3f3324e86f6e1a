#include <doctest.h>

#include <cmath>

#include "hk/compact_kernels.hpp"
#include "hk/validate.hpp"

using namespace hk;

TEST_SUITE("compact") {

TEST_CASE("SO(2) kernel has unit mass against d theta and is even") {
  for (double t : {0.005, 0.1, 2.0}) {
    const auto m = integrate_circle<double>([t](double th) { return rho_so2(t, th); }, {});
    CHECK(2 * M_PI * m.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rho_so2(t, 0.4) == doctest::Approx(rho_so2(t, -0.4)).epsilon(1e-14));
  }
}

TEST_CASE("SO(2) kernel is continuous across the small-t branch switch") {
  CHECK(rho_so2(0.0199999, 0.3) == doctest::Approx(rho_so2(0.0200001, 0.3)).epsilon(1e-4));
}

TEST_CASE("SU(2) kernel: unit mass, class function, trace moment") {
  const double t = 0.7;
  const Su2Integrand f = [t](const Mat2& k) { return rho_su2(t, {k, Group::SU2}); };
  CHECK(su2_rule_sum(f, Su2Rule{}) == doctest::Approx(1.0).epsilon(1e-12));
  const Su2Integrand g = [t](const Mat2& k) { return k.trace().real() * rho_su2(t, {k, Group::SU2}); };
  CHECK(su2_rule_sum(g, Su2Rule{}) == doctest::Approx(2.0 * std::exp(-3.0 * t / 8.0)).epsilon(1e-12));
  const GroupElement k{torus(0.3) * rot(0.9), Group::SU2};
  const GroupElement h{rot(1.1) * torus(-0.2), Group::SU2};
  CHECK(rho_su2(t, h * k * inverse(h)) == doctest::Approx(rho_su2(t, k)).epsilon(1e-13));
}

TEST_CASE("SO(2) from the SU(2) integral: corrected relation holds, printed one does not") {
  for (double t : {0.25, 1.0, 4.0})
    for (double th : {0.0, 1.0, 2.5}) {
      const double direct = rho_so2(t, 0.5 * th);
      CHECK(rho_so2_via_su2(t, th) == doctest::Approx(direct).epsilon(1e-7));
    }
  const double direct = rho_so2(1.0, 0.5);
  CHECK(std::abs(rho_so2_via_su2_printed(1.0, 1.0) - direct) > 1e-3 * direct);
}

TEST_CASE("Brownian motion on SU(2) matches E tr = 2 e^{-3t/8}") {
  McConfig cfg;
  cfg.n_paths = 20000;
  cfg.n_steps = 100;
  cfg.seed = 5;
  const double t = 1.0;
  const auto s = mc_brownian(Group::SU2, t, cfg, Exec::Parallel);
  const McEstimate e = mc_expectation(s, [](const GroupElement& g) { return g.m.trace().real(); });
  CHECK(std::abs(e.mean - 2.0 * std::exp(-3.0 * t / 8.0)) <= 4.0 * e.stderr_ + 2e-3);
}

}
