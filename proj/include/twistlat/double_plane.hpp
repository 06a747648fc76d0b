#pragma once

#include <array>
#include <utility>
#include <vector>

#include "twistlat/cohomology.hpp"

namespace twistlat {

// Numerical invariants of a double cover S -> P^2 branched along a smooth
// curve of degree 2d. All functions reject d < 1 with std::invalid_argument.

struct SurfaceGeometry {
  long d = 0;
  long c1_coeff = 0;  // c1(T_S) = c1_coeff * h
  long c2 = 0;        // topological Euler characteristic
  Rational chi_O;     // holomorphic Euler characteristic
};

struct HodgeDiamond {
  long h00 = 1;
  long h01 = 0;
  long h02 = 0;
  long h11 = 0;

  long euler_characteristic() const { return 2 * h00 - 4 * h01 + 2 * h02 + h11; }
  // (h00, h01, h02, h11, h20, h21, h22) with the symmetric entries filled in.
  std::array<long, 7> flattened() const { return {h00, h01, h02, h11, h02, h01, h00}; }
  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;
};

struct CanonicalData {
  long twist = 0;                     // omega_S = pi^* O(twist)
  bool canonical_map_is_cover = false;
};

SurfaceGeometry surface_geometry(long d);

// ch(T_S) = 2 + (3 - d) h + (3 - 3d^2) pt.
SurfaceClass chern_character_tangent(long d);

HodgeDiamond hodge_diamond(long d);

// (td(S), sqrt(td(S))).
std::pair<SurfaceClass, SurfaceClass> todd_and_sqrt(long d);

// Twists k of the line bundles O(k) in pi_* O_S = O + O(-d).
std::vector<long> pushforward_structure_sheaf(long d);

// The flag is asserted only for the branch octic, d = 4.
CanonicalData canonical_data(long d);

}  // namespace twistlat
