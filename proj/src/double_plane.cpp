#include "twistlat/double_plane.hpp"

#include <stdexcept>
#include <string>

namespace twistlat {

namespace {

void require_positive(long d) {
  if (d < 1) throw std::invalid_argument("half branch degree d must be >= 1, got " + std::to_string(d));
}

const IntersectionData kDoublePlane{};

}  // namespace

SurfaceGeometry surface_geometry(long d) {
  require_positive(d);
  return {d, 3 - d, 4 * d * d - 6 * d + 6, Rational(d * d - 3 * d + 4, 2)};
}

SurfaceClass chern_character_tangent(long d) {
  require_positive(d);
  return {2, Rational(3 - d), 0, Rational(3 - 3 * d * d)};
}

HodgeDiamond hodge_diamond(long d) {
  require_positive(d);
  return {1, 0, (d - 1) * (d - 2) / 2, 3 * d * d - 3 * d + 2};
}

std::pair<SurfaceClass, SurfaceClass> todd_and_sqrt(long d) {
  const SurfaceGeometry geometry = surface_geometry(d);
  const SurfaceClass td{1, Rational(geometry.c1_coeff, 2), 0, geometry.chi_O};
  return {td, sqrt_unit(td, kDoublePlane)};
}

std::vector<long> pushforward_structure_sheaf(long d) {
  require_positive(d);
  return {0, -d};
}

CanonicalData canonical_data(long d) {
  require_positive(d);
  return {d - 3, d == 4};
}

}  // namespace twistlat
