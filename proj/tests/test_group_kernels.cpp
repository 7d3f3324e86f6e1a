#include <doctest.h>

#include <cmath>

#include "hk/errors.hpp"
#include "hk/group_kernels.hpp"

using namespace hk;

TEST_SUITE("group_kernels") {

TEST_CASE("method names round-trip") {
  for (Method m : {Method::Main, Method::Subelliptic, Method::ViaSl2c, Method::Sl2c})
    CHECK(parse_method(method_name(m)) == m);
  CHECK(parse_method("sub") == Method::Subelliptic);
  CHECK_THROWS_AS(parse_method("fourier"), ConfigError);
  CHECK(method_group(Method::Sl2c) == Group::SL2C);
}

TEST_CASE("subelliptic kernel depends only on the angle sum") {
  const GroupElement g1{rot(0.2) * a_half(1.0) * rot(0.55), Group::SL2R};
  const GroupElement g2{rot(0.75) * a_half(1.0), Group::SL2R};
  const double a = rho_sl2r_subelliptic(1.0, g1).value;
  CHECK(a > 0.0);
  CHECK(rho_sl2r_subelliptic(1.0, g2).value == doctest::Approx(a).epsilon(1e-10));
  // angle sums differing by 4 pi name the same element
  CHECK(p_sl2r_subelliptic(1.0, 0.5, 0.3).value == doctest::Approx(p_sl2r_subelliptic(1.0, 0.5, 0.3 + 2 * M_PI).value).epsilon(1e-10));
}

TEST_CASE("MAIN kernel depends only on the angle sum") {
  const GroupElement g1{rot(0.2) * a_half(1.0) * rot(0.55), Group::SL2R};
  const GroupElement g2{rot(0.75) * a_half(1.0), Group::SL2R};
  CHECK(rho_sl2r_main(1.0, g1).value == doctest::Approx(rho_sl2r_main(1.0, g2).value).epsilon(1e-10));
}

TEST_CASE("SL(2,C) kernel is inverse-symmetric and K-invariant on positive elements") {
  const GroupElement g{torus(0.3) * a_half(0.8) * rot(0.4), Group::SL2C};
  const double v = rho_sl2c(1.0, g).value;
  CHECK(v > 0.0);
  CHECK(rho_sl2c(1.0, inverse(g)).value == doctest::Approx(v).epsilon(1e-10));
  // for g = k a k^{-1} the K-part of the Cartan factorization is trivial
  const GroupElement k{rot(1.2) * torus(0.7), Group::SL2C};
  const GroupElement a{a_half(0.8), Group::SL2C};
  CHECK(rho_sl2c(1.0, k * a * inverse(k)).value == doctest::Approx(rho_sl2c(1.0, a).value).epsilon(1e-10));
}

TEST_CASE("SL(2,C) radial factor: closed form equals quadrature") {
  for (double u : {-1.0, 0.0, 0.7})
    CHECK(sl2c_radial_factor_quadrature(1.0, u, Sl2cWeight::HarishChandra) ==
          doctest::Approx(sl2c_radial_factor(1.0, u, Sl2cWeight::HarishChandra)).epsilon(1e-10));
}

TEST_CASE("grid rows are ordered and serial equals parallel bit for bit") {
  GridSpec grid{Group::SL2R, {Method::Main, Method::Subelliptic}, {1.0}, {0.0, 1.0}, {0.0, M_PI}};
  const auto a = evaluate_grid(grid, {}, Exec::Serial);
  const auto b = evaluate_grid(grid, {}, Exec::Parallel);
  REQUIRE(a.size() == 8);
  REQUIRE(b.size() == 8);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].result.value == b[i].result.value);
    CHECK(a[i].method == b[i].method);
  }
  CHECK(a[0].method == Method::Main);
  CHECK(a[4].method == Method::Subelliptic);
  CHECK(a[1].angle_sum == doctest::Approx(M_PI));
  CHECK(a[2].r == 1.0);
}

TEST_CASE("kernel_compare pairs only routes of one group") {
  const GroupElement g = grid_point(Group::SL2R, 0.5, 0.0);
  const CompareReport rep = kernel_compare(1.0, g, {Method::Main, Method::Subelliptic});
  REQUIRE(rep.pairs.size() == 1);
  CHECK(rep.pairs[0].tolerance == 1e-5);
  CHECK(rep.results[1].value == doctest::Approx(rho_sl2r_subelliptic(1.0, g).value * kSubellipticToMain));
}

TEST_CASE("wrong group is rejected") {
  const GroupElement c{torus(0.3), Group::SL2C};
  CHECK_THROWS(rho_sl2r_main(1.0, c));
  CHECK_THROWS(rho_sl2r_subelliptic(-1.0, grid_point(Group::SL2R, 0.5, 0.0)));
}

}
