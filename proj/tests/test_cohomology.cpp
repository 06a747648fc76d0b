#include <doctest.h>

#include <random>
#include <stdexcept>

#include "test_support.hpp"
#include "twistlat/cohomology.hpp"

using namespace twistlat;
using twistlat::testing::random_base_class;
using twistlat::testing::random_intersection_data;
using twistlat::testing::random_surface_class;

namespace {

const IntersectionData kTwisted{2, 1, 3};

bool lowest_terms(const Rational& q) {
  return q.denominator() > 0 && gcd(q.numerator(), q.denominator()) == 1;
}

}  // namespace

TEST_CASE("surface products") {
  std::mt19937_64 rng(1);
  const SurfaceClass one_plus_h{1, 1, 0, 0};
  for (int i = 0; i < 20; ++i) {
    const IntersectionData data = random_intersection_data(rng);
    CHECK(multiply(one_plus_h, one_plus_h, data) == SurfaceClass{1, 2, 0, 2});
    const SurfaceClass x = random_surface_class(rng);
    CHECK(multiply(x, SurfaceClass::unit(), data) == x);
  }
  const SurfaceClass two_B{0, 0, 2, 0};
  CHECK(multiply(two_B, two_B, kTwisted) == SurfaceClass{0, 0, 0, 3});
  // h.B = m/2
  CHECK(multiply(SurfaceClass::h(), SurfaceClass::B(), IntersectionData{2, 5, 0}) == SurfaceClass{0, 0, 0, Rational(5, 2)});
}

TEST_CASE("ring axioms on the surface") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const IntersectionData data = random_intersection_data(rng);
    const SurfaceClass x = random_surface_class(rng);
    const SurfaceClass y = random_surface_class(rng);
    const SurfaceClass z = random_surface_class(rng);
    CHECK(multiply(x, y, data) == multiply(y, x, data));
    CHECK(multiply(multiply(x, y, data), z, data) == multiply(x, multiply(y, z, data), data));
    CHECK(multiply(x, y + z, data) == multiply(x, y, data) + multiply(x, z, data));
    CHECK(multiply(SurfaceClass::unit(), x, data) == x);
  }
}

TEST_CASE("ring axioms on the plane") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const BaseClass x = random_base_class(rng);
    const BaseClass y = random_base_class(rng);
    const BaseClass z = random_base_class(rng);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * BaseClass::unit() == x);
  }
}

TEST_CASE("plane products") {
  const BaseClass ch_minus_one{1, -1, Rational(1, 2)};
  CHECK(ch_minus_one * ch_minus_one == BaseClass{1, -2, 2});
  CHECK(ch_minus_one * ch_minus_one == chern_character_line_bundle(-2));
  const BaseClass td_plane{1, Rational(3, 2), 1};
  CHECK(td_plane * BaseClass{8, -16, 17} == BaseClass{8, -4, 1});
}

TEST_CASE("dual") {
  CHECK(dual(SurfaceClass{2, 3, 0, -1}) == SurfaceClass{2, -3, 0, -1});
  CHECK(dual(SurfaceClass::unit()) == SurfaceClass::unit());
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const IntersectionData data = random_intersection_data(rng);
    const SurfaceClass x = random_surface_class(rng);
    const SurfaceClass y = random_surface_class(rng);
    CHECK(dual(dual(x)) == x);
    CHECK(dual(multiply(x, y, data)) == multiply(dual(x), dual(y), data));
  }
}

TEST_CASE("exponential of a degree-2 class") {
  CHECK(exp_degree2(SurfaceClass{}, kTwisted) == SurfaceClass::unit());
  CHECK(exp_degree2(SurfaceClass::h(), kTwisted) == SurfaceClass{1, 1, 0, 1});
  CHECK(exp_degree2(SurfaceClass::B(), kTwisted) == SurfaceClass{1, 0, 1, Rational(3, 8)});
  CHECK_THROWS_AS(exp_degree2(SurfaceClass{1, 1, 0, 0}, kTwisted), std::invalid_argument);
  CHECK_THROWS_AS(exp_degree2(SurfaceClass::point(), kTwisted), std::invalid_argument);

  // exp(x) exp(y) = exp(x + y)
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const IntersectionData data = random_intersection_data(rng);
    SurfaceClass x = random_surface_class(rng);
    SurfaceClass y = random_surface_class(rng);
    x.r = x.s = y.r = y.s = 0;
    CHECK(multiply(exp_degree2(x, data), exp_degree2(y, data), data) == exp_degree2(x + y, data));
  }
}

TEST_CASE("square root of a unit class") {
  const IntersectionData plane{};
  CHECK(sqrt_unit(SurfaceClass::unit(), plane) == SurfaceClass::unit());
  CHECK(sqrt_unit(SurfaceClass{1, Rational(-1, 2), 0, 4}, plane) ==
        SurfaceClass{1, Rational(-1, 4), 0, Rational(31, 16)});
  CHECK(sqrt_unit(SurfaceClass{1, 2, 0, 2}, plane) == SurfaceClass{1, 1, 0, 0});
  CHECK_THROWS_AS(sqrt_unit(SurfaceClass{2, 0, 0, 0}, plane), std::invalid_argument);

  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const IntersectionData data = random_intersection_data(rng);
    SurfaceClass a = random_surface_class(rng);
    a.r = 1;
    const SurfaceClass root = sqrt_unit(a, data);
    CHECK(multiply(root, root, data) == a);
    CHECK(lowest_terms(root.a_h));
    CHECK(lowest_terms(root.s));
  }
}

TEST_CASE("Mukai pairing") {
  const SurfaceClass sqrt_td{1, Rational(-1, 4), 0, Rational(31, 16)};
  const SurfaceClass sqrt_td_h{0, 1, 0, Rational(-1, 2)};
  const SurfaceClass sqrt_td_2_2B = multiply(sqrt_td, SurfaceClass{2, 0, 2, 0}, kTwisted);
  CHECK(mukai_pairing(sqrt_td_h, sqrt_td_h, -1, kTwisted) == Rational(-2));
  CHECK(mukai_pairing(SurfaceClass::point(), sqrt_td_2_2B, -1, kTwisted) == Rational(2));
  // chi(O_S) = 4 by Noether's formula for the branch octic.
  CHECK(mukai_pairing(sqrt_td, sqrt_td, -1, IntersectionData{}) == Rational(4));
}

TEST_CASE("Mukai pairing: cup-product definition equals the expanded form for c1 = -h") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    const IntersectionData data = random_intersection_data(rng);
    const SurfaceClass a = random_surface_class(rng);
    const SurfaceClass b = random_surface_class(rng);
    CHECK(mukai_pairing(a, b, -1, data) == mukai_pairing_expanded(a, b, data));
  }
}

TEST_CASE("pushforward and pullback along the double cover") {
  CHECK(pushforward(SurfaceClass{4, -2, 0, 17}) == BaseClass{8, -4, 17});
  CHECK(pushforward(SurfaceClass::unit()) == BaseClass{2, 0, 0});
  CHECK(pushforward(SurfaceClass::point()) == BaseClass::point());
  CHECK_THROWS_AS(pushforward(SurfaceClass::B()), std::invalid_argument);

  CHECK(pullback(BaseClass::hyperplane()) == SurfaceClass::h());
  CHECK(pullback(BaseClass::point()) == SurfaceClass{0, 0, 0, 2});
}

TEST_CASE("projection formula") {
  std::mt19937_64 rng(9);
  const IntersectionData data{};
  for (int i = 0; i < 300; ++i) {
    const BaseClass x = random_base_class(rng);
    SurfaceClass y = random_surface_class(rng);
    y.a_B = 0;
    CHECK(integrate(multiply(pullback(x), y, data)) == integrate(x * pushforward(y)));
    // pi_* pi^* x = 2x
    CHECK(pushforward(pullback(x)) == Rational(2) * x);
  }
}

TEST_CASE("class rendering") {
  CHECK(SurfaceClass{1, Rational(-1, 4), 0, Rational(31, 16)}.to_string() == "1 - 1/4*h + 31/16*pt");
  CHECK(SurfaceClass{}.to_string() == "0");
  CHECK(BaseClass{-1, 1, 0}.to_string() == "-1 + H");
}
