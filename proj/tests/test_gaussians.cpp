#include <doctest.h>

#include <cmath>

#include "hk/gaussians.hpp"
#include "hk/lie2.hpp"

using namespace hk;

TEST_SUITE("gaussians") {

TEST_CASE("spherical functions: phi_nu(0) = 1, SL(2,C) closed form") {
  CHECK(spherical_phi_sl2r(0.7, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  for (double nu : {0.3, 1.0, 2.5})
    for (double r : {0.2, 1.0, 2.0})
      CHECK(spherical_Phi_sl2c(nu, r) == doctest::Approx(spherical_Phi_sl2c_closed(nu, r)).epsilon(1e-9));
}

TEST_CASE("holomorphic extension agrees with the K-average on the real axis") {
  for (double nu : {0.5, 1.0})
    for (double r : {0.3, 1.5}) {
      const cplx h = spherical_phi_sl2r_holomorphic(nu, std::cosh(r));
      CHECK(std::abs(h.imag()) <= 1e-12);
      CHECK(h.real() == doctest::Approx(spherical_phi_sl2r(nu, r)).epsilon(1e-9));
    }
}

TEST_CASE("lift: Phi_{2 nu}(r) is the SU(2) average of phi_nu at k a_{r/2}^2 k*") {
  // z = tr(M M^T) / 2 with M = k a_{r/2}^2 k^*, the holomorphic cosh of the Cartan radius
  for (double nu : {0.5, 1.0})
    for (double r : {0.5, 1.0}) {
      const Mat2 a2 = a_half(r) * a_half(r);
      const QuadratureSpec spec;
      const double lifted = su2_rule_sum(
          [&](const Mat2& k) {
            const Mat2 m = k * a2 * k.adjoint();
            const cplx z = 0.5 * (m * m.transpose()).trace();
            return spherical_phi_sl2r_holomorphic(nu, z, spec).real();
          },
          Su2Rule{24, 24, 48});
      CHECK(lifted == doctest::Approx(spherical_Phi_sl2c(2.0 * nu, r)).epsilon(1e-5));
    }
}

TEST_CASE("heat Gaussians: integral, spectral and reduction routes agree") {
  for (double t : {0.5, 2.0})
    for (double r : {0.1, 1.0, 3.0}) {
      const double a = heat_gaussian_sl2r_integral(t, r);
      CHECK(heat_gaussian_sl2r_spectral(t, r) == doctest::Approx(a).epsilon(1e-6));
      CHECK(heat_gaussian_sl2r_via_reduction(t, r) == doctest::Approx(a).epsilon(1e-6));
    }
}

TEST_CASE("the reduction identity as printed does not hold") {
  const double t = 1.0, r = 1.0;
  const double lhs = reduction_as_printed(t, r);
  const double rhs = heat_gaussian_sl2r_integral(t / 2.0, r);
  CHECK(std::abs(lhs / rhs - 1.0) > 0.1);
}

TEST_CASE("SL(2,C) spectral weight: nu^2 / 2pi^2 reproduces the closed form, sinh^2 does not") {
  for (double t : {0.5, 1.0})
    for (double r : {0.2, 1.5}) {
      const double closed = heat_gaussian_sl2c(t, r);
      CHECK(heat_gaussian_sl2c_spectral(t, r, Sl2cWeight::HarishChandra) == doctest::Approx(closed).epsilon(1e-8));
      CHECK(std::abs(heat_gaussian_sl2c_spectral(t, r, Sl2cWeight::SinhSquared) / closed - 1.0) > 1.0);
    }
  CHECK(plancherel_weight(0.8, RootDatum{1, 0}) == doctest::Approx(0.8 * std::tanh(M_PI * 0.8) / (2 * M_PI)));
  CHECK(plancherel_weight(0.8, RootDatum{2, 0}) == doctest::Approx(0.64 / (2 * M_PI * M_PI)));
}

}
