#include <doctest.h>

#include <stdexcept>

#include "twistlat/cohomology.hpp"
#include "twistlat/double_plane.hpp"

using namespace twistlat;

namespace {

// chi(P^2, O(k)) by Riemann-Roch: degree-4 part of ch(O(k)) td(P^2).
Rational euler_characteristic_plane(long k) {
  const BaseClass td_plane{1, Rational(3, 2), 1};
  return integrate(chern_character_line_bundle(k) * td_plane);
}

}  // namespace

TEST_CASE("branch octic") {
  CHECK(chern_character_tangent(4) == SurfaceClass{2, -1, 0, -45});
  const SurfaceGeometry g = surface_geometry(4);
  CHECK(g.c1_coeff == -1);
  CHECK(g.c2 == 46);
  CHECK(g.chi_O == Rational(4));
  CHECK(hodge_diamond(4) == HodgeDiamond{1, 0, 3, 38});
  CHECK(hodge_diamond(4).flattened() == std::array<long, 7>{1, 0, 3, 38, 3, 0, 1});
  const auto [td, root] = todd_and_sqrt(4);
  CHECK(td == SurfaceClass{1, Rational(-1, 2), 0, 4});
  CHECK(root == SurfaceClass{1, Rational(-1, 4), 0, Rational(31, 16)});
  CHECK(pushforward_structure_sheaf(4) == std::vector<long>{0, -4});
  const CanonicalData canonical = canonical_data(4);
  CHECK(canonical.twist == 1);
  CHECK(canonical.canonical_map_is_cover);
}

TEST_CASE("K3 double sextic") {
  const SurfaceClass ch = chern_character_tangent(3);
  CHECK(ch == SurfaceClass{2, 0, 0, -24});
  CHECK(surface_geometry(3).c2 == 24);
  CHECK(hodge_diamond(3) == HodgeDiamond{1, 0, 1, 20});
  const auto [td, root] = todd_and_sqrt(3);
  CHECK(td == SurfaceClass{1, 0, 0, 2});
  CHECK(root == SurfaceClass{1, 0, 0, 1});
  CHECK(canonical_data(3).twist == 0);
  CHECK_FALSE(canonical_data(3).canonical_map_is_cover);
}

TEST_CASE("quadric surface, d = 1") {
  CHECK(chern_character_tangent(1) == SurfaceClass{2, 2, 0, 0});
  CHECK(surface_geometry(1).c2 == 4);
  CHECK(hodge_diamond(1) == HodgeDiamond{1, 0, 0, 2});
  CHECK(pushforward_structure_sheaf(1) == std::vector<long>{0, -1});
  CHECK(canonical_data(2).twist == -1);
  CHECK_FALSE(canonical_data(2).canonical_map_is_cover);
}

TEST_CASE("invalid branch degree") {
  CHECK_THROWS_AS(surface_geometry(0), std::invalid_argument);
  CHECK_THROWS_AS(chern_character_tangent(-1), std::invalid_argument);
  CHECK_THROWS_AS(hodge_diamond(0), std::invalid_argument);
  CHECK_THROWS_AS(todd_and_sqrt(0), std::invalid_argument);
  CHECK_THROWS_AS(pushforward_structure_sheaf(0), std::invalid_argument);
  CHECK_THROWS_AS(canonical_data(0), std::invalid_argument);
}

TEST_CASE("consistency for 1 <= d <= 50") {
  const IntersectionData data{};
  for (long d = 1; d <= 50; ++d) {
    CAPTURE(d);
    const SurfaceGeometry g = surface_geometry(d);
    // Noether
    CHECK(Rational(2 * g.c1_coeff * g.c1_coeff + g.c2, 12) == g.chi_O);
    CHECK(g.chi_O.is_integer());
    // c2 from ch(T_S): c2 = c1^2 / 2 - ch2
    const SurfaceClass ch = chern_character_tangent(d);
    const Rational c1_squared = Rational(2) * ch.a_h * ch.a_h;
    CHECK(c1_squared / Rational(2) - ch.s == Rational(g.c2));
    CHECK(hodge_diamond(d).euler_characteristic() == g.c2);
    const auto [td, root] = todd_and_sqrt(d);
    CHECK(td.s == g.chi_O);
    if (d <= 20) CHECK(multiply(root, root, data) == td);
    // Riemann-Roch on the plane for pi_* O_S
    if (d <= 10) {
      Rational chi = 0;
      for (long k : pushforward_structure_sheaf(d)) chi += euler_characteristic_plane(k);
      CHECK(chi == g.chi_O);
    }
  }
}
