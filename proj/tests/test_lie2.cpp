#include <doctest.h>

#include <cmath>
#include <random>

#include "hk/errors.hpp"
#include "hk/lie2.hpp"

using namespace hk;

TEST_SUITE("lie2") {

TEST_CASE("Iwasawa and Cartan reconstruct random elements") {
  std::mt19937_64 rng(7);
  for (Group grp : {Group::SL2R, Group::SL2C}) {
    for (int i = 0; i < 200; ++i) {
      const GroupElement g = random_element(grp, rng);
      const IwasawaNAK iw = iwasawa_nak(g);
      CHECK(max_entry_diff(iw.na() * iw.k.m, g.m) <= 1e-12 * std::max(1.0, g.m.max_abs()));
      const CartanKAK c = cartan_kak(g);
      CHECK(c.r >= 0.0);
      // g = conj k_prod and conj = k a_{r/2} k^{-1} is positive
      CHECK(max_entry_diff(c.conj.m * c.k_prod.m, g.m) <= 1e-12 * std::max(1.0, g.m.max_abs()));
      CHECK(std::abs(std::exp(0.5 * c.r) + std::exp(-0.5 * c.r) - c.conj.m.trace().real()) <= 1e-10 * std::exp(0.5 * c.r));
    }
  }
}

TEST_CASE("Iwasawa a-log matches the full decomposition") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = random_element(Group::SL2C, rng);
    CHECK(iwasawa_a_log(g.m) == doctest::Approx(iwasawa_nak(g).a_log).epsilon(1e-12));
  }
}

TEST_CASE("grid elements have the requested Cartan coordinates") {
  const GroupElement g{rot(0.3) * a_half(1.7) * rot(0.5), Group::SL2R};
  const CartanKAK c = cartan_kak(g);
  CHECK(c.r == doctest::Approx(1.7).epsilon(1e-12));
  CHECK(so2_angle(c.k_prod.m) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(polar_height(g) == doctest::Approx(1.7).epsilon(1e-12));
}

TEST_CASE("cocycle identity") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const GroupElement g1 = random_element(Group::SL2R, rng, 3.0);
    const GroupElement g2 = random_element(Group::SL2R, rng, 3.0);
    const GroupElement x = random_element(Group::SL2R, rng, 3.0);
    const GroupElement na{iwasawa_nak(x).na(), Group::SL2R};
    const GroupElement lhs = kappa_cocycle(g1 * g2, na);
    const GroupElement rhs = kappa_cocycle(g1, na_action(g2, na)) * kappa_cocycle(g2, na);
    CHECK(max_entry_diff(lhs.m, rhs.m) <= 1e-11);
  }
}

TEST_CASE("frame bracket [Z1, Z2] = -Z3") {
  const LieFrame f = make_frame(Group::SL2R);
  REQUIRE(f.dirs.size() == 3);
  const Mat2& z1 = f.dirs[0].z;
  const Mat2& z2 = f.dirs[1].z;
  const Mat2& z3 = f.dirs[2].z;
  CHECK(max_entry_diff(z1 * z2 - z2 * z1, cplx(-1.0) * z3) <= 1e-15);
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS_AS(make_element(Mat2{2.0, 0.0, 0.0, 1.0}, Group::SL2R), DeterminantError);
  CHECK_THROWS_AS(make_element(Mat2{cplx(1, 1), 0.0, 0.0, cplx(0.5, -0.5)}, Group::SL2R), RealityError);
  CHECK_THROWS_AS(parse_group("sl3r"), ConfigError);
}

}
