#include <doctest.h>

#include <cmath>

#include "hk/errors.hpp"
#include "hk/quad.hpp"

using namespace hk;

TEST_SUITE("quad") {

TEST_CASE("Gauss-Legendre is exact for polynomials of degree 2n-1") {
  const GLRule& r = gauss_legendre(8);
  double s = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::pow(r.x[i], 14);
  CHECK(s == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("adaptive finite integral") {
  const QuadratureSpec spec;
  const auto r = integrate_finite<double>([](double x) { return std::exp(-x) * std::sin(5 * x); }, 0.0, 3.0, spec);
  const double exact = (5.0 - std::exp(-3.0) * (std::sin(15.0) + 5 * std::cos(15.0))) / 26.0;
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("Gaussian tail integral") {
  const auto r = integrate_gaussian_tail<double>([](double x) { return std::exp(-x * x / 2); }, 0.0, 1.0, {});
  CHECK(r.value == doctest::Approx(std::sqrt(2 * M_PI)).epsilon(1e-12));
}

TEST_CASE("square-root endpoint transforms agree with a closed form") {
  // int_r^inf sinh(s) e^{-s'} / sqrt(cosh s - cosh r) ds with s' = cosh s - cosh r: sqrt(pi)
  const double r = 0.8;
  const Integrand<double> f = [r](double s) { return std::sinh(s) * std::exp(-(std::cosh(s) - std::cosh(r))); };
  const auto a = integrate_sqrt_endpoint(f, r, INFINITY, SqrtTransform::HyperbolicPythagoras, {}, 1.0);
  CHECK(a.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
  // finite upper limit: int_r^u sinh s / sqrt(cosh s - cosh r) = 2 sqrt(cosh u - cosh r)
  const Integrand<double> g = [](double s) { return std::sinh(s); };
  const auto b = integrate_sqrt_endpoint(g, r, 2.0, SqrtTransform::Quadratic, {});
  CHECK(b.value == doctest::Approx(2 * std::sqrt(std::cosh(2.0) - std::cosh(r))).epsilon(1e-11));
  const auto c = integrate_sqrt_endpoint(g, r, 2.0, SqrtTransform::HyperbolicPythagoras, {});
  CHECK(c.value == doctest::Approx(b.value).epsilon(1e-11));
}

TEST_CASE("series summation") {
  const auto r = sum_series<double>([](long n) { return 1.0 / ((n + 1.0) * (n + 1.0) * (n + 1.0) * (n + 1.0)); });
  CHECK(r.value == doctest::Approx(std::pow(M_PI, 4) / 90).epsilon(1e-9));
}

TEST_CASE("Haar rules on SO(2) and SU(2)") {
  const auto c = integrate_circle<double>([](double th) { return std::cos(th) * std::cos(th); }, {});
  CHECK(c.value == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(su2_rule_sum([](const Mat2&) { return 1.0; }, Su2Rule{}) == doctest::Approx(1.0).epsilon(1e-14));
  // E|a|^2 = 1/2 and E tr = 0 under Haar measure on SU(2)
  CHECK(su2_rule_sum([](const Mat2& k) { return std::norm(k.a); }, Su2Rule{}) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(std::abs(su2_rule_sum([](const Mat2& k) { return k.trace().real(); }, Su2Rule{})) <= 1e-13);
}

TEST_CASE("serial and parallel paths are bit-identical") {
  const Su2Integrand f = [](const Mat2& k) { return std::exp(k.a.real()) * std::norm(k.b); };
  CHECK(su2_rule_sum(f, Su2Rule{}, Exec::Serial) == su2_rule_sum(f, Su2Rule{}, Exec::Parallel));
  const Integrand<double> g = [](double th) { return std::exp(std::sin(3 * th)); };
  CHECK(integrate_circle(g, {}, Exec::Serial).value == integrate_circle(g, {}, Exec::Parallel).value);
}

TEST_CASE("budget exhaustion is reported") {
  QuadratureSpec s;
  s.max_panels = 1;
  s.gl_order = 2;
  const auto r = integrate_finite<double>([](double x) { return std::sin(40 * x); }, 0.0, 10.0, s);
  CHECK_FALSE(r.converged);
  CHECK_THROWS_AS(require_converged(r, "test"), BudgetExceeded);
  QuadratureSpec bad;
  bad.rel_tol = -1;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

}
