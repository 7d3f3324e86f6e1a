#include <doctest.h>

#include <cmath>

#include "hk/specfun.hpp"

using namespace hk;

TEST_SUITE("specfun") {

TEST_CASE("theta inversion: heat-Gaussian sum equals the Fourier sum") {
  for (double t : {0.01, 0.1, 1.0, 10.0})
    for (double x : {0.0, 0.7, 2.0, -3.1}) {
      const cplx a = theta_dual(x, t);
      const cplx b = theta_fourier(x, t);
      CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("Jacobi theta at small Im tau goes through the modular branch") {
  // theta(0, i s) = s^{-1/2} theta(0, i/s)
  for (double s : {0.01, 0.04, 0.2}) {
    const cplx lhs = jacobi_theta({0.0, cplx(0.0, s)});
    const cplx rhs = jacobi_theta({0.0, cplx(0.0, 1.0 / s)}) / std::sqrt(s);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
  }
}

TEST_CASE("Chebyshev polynomials") {
  CHECK(chebyshev_U(0, 0.3) == 1.0);
  CHECK(chebyshev_U(1, 0.3) == doctest::Approx(0.6));
  CHECK(chebyshev_T(3, 0.3) == doctest::Approx(4 * 0.027 - 0.9));
  // U_{m-1}(cos x) = sin(m x) / sin(x)
  for (int m : {1, 5, 17, 64}) {
    const double x = 0.37;
    CHECK(chebyshev_U(m - 1, std::cos(x)) == doctest::Approx(std::sin(m * x) / std::sin(x)).epsilon(1e-12));
  }
  // U_{m-1}(cosh y) = sinh(m y) / sinh(y) outside [-1, 1]
  CHECK(chebyshev_U(9, std::cosh(0.8)) == doctest::Approx(std::sinh(8.0) / std::sinh(0.8)).epsilon(1e-12));
  CHECK(chebyshev_U(3, 1.0) == doctest::Approx(4.0));
  CHECK(chebyshev_U(3, -1.0) == doctest::Approx(-4.0));
}

TEST_CASE("gamma function") {
  CHECK(gamma_fn(0.5).real() == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
  CHECK(gamma_fn(5.0).real() == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(gamma_fn(-0.5).real() == doctest::Approx(-2.0 * std::sqrt(M_PI)).epsilon(1e-13));
  // |Gamma(1/2 + i y)|^2 = pi / cosh(pi y)
  const double y = 1.3;
  CHECK(std::norm(gamma_fn(cplx(0.5, y))) == doctest::Approx(M_PI / std::cosh(M_PI * y)).epsilon(1e-12));
}

TEST_CASE("c-function density for SL(2,R)") {
  for (double nu : {0.1, 0.5, 2.0}) {
    const cplx c = hc_c_function(cplx(0.0, nu), RootDatum{1, 0});
    CHECK(1.0 / std::norm(c) == doctest::Approx(hc_density_sl2r(nu)).epsilon(1e-10));
  }
  CHECK(std::abs(hc_c_function(0.5, RootDatum{1, 0}) - 1.0) <= 1e-13);
}

TEST_CASE("hyperbolic Pythagoras and the acosh ratio") {
  const double r = 1.2, y = 0.7;
  CHECK(std::cosh(hyp_pythagoras(r, y) / 2) == doctest::Approx(std::cosh(r / 2) * std::cosh(y / 2)).epsilon(1e-14));
  CHECK(acosh_ratio(0.0, 0.0) == doctest::Approx(1.0));
  CHECK(acosh_ratio(1e-9, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  const double X = std::cosh(0.4) * std::cosh(0.9);
  CHECK(acosh_ratio(0.4, 0.9) == doctest::Approx(arccosh(X) / std::sqrt(X * X - 1.0)).epsilon(1e-13));
}

}
