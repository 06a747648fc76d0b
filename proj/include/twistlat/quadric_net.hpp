#pragma once

#include <optional>
#include <vector>

#include "twistlat/rational.hpp"

namespace twistlat {

// A family of quadrics sigma: E -> E^v (x) O(twist_degree) over P^2 (or a line),
// with E of the given rank and det E = O(det_degree).
struct QuadricFamily {
  long rank = 1;
  long det_degree = 0;
  long twist_degree = 1;
};

// Parts of a split bundle O(a_1) + ... + O(a_r), sorted a_1 >= ... >= a_r.
using SplittingType = std::vector<long>;

// Degree of det(E)^{-2} (x) O(rank * twist), the line bundle cutting out the discriminant.
long discriminant_degree(const QuadricFamily& family);

// h^0 on P^1 of the split bundle: sum of max(a_i + 1, 0).
long h0_on_line(const SplittingType& type);

// All splitting types of the given rank and degree, in decreasing lexicographic
// order. subbundle_of_trivial keeps a_i <= 0; h0 keeps types with h0_on_line == h0.
// At least one of the two filters must be active, otherwise the set is infinite
// and std::invalid_argument is thrown.
std::vector<SplittingType> splitting_types(long rank, long degree, bool subbundle_of_trivial,
                                           std::optional<long> h0 = std::nullopt);

struct HeckeParity {
  long degree = 0;             // 2 * base_degree + modifications
  Rational half_fractional;    // { degree / 2 }
};

// Degree after pulling back along a double cover and performing simple Hecke
// transforms, and the resulting fractional part {B.h}.
HeckeParity hecke_degree_parity(long base_degree, long modifications);

// Number of special points on a general line: discriminant points of both families.
long special_point_census(const QuadricFamily& quadric_surfaces, const QuadricFamily& conics);

// The families appearing in the net of three quadrics in P^7.
inline constexpr QuadricFamily kNetOfQuadrics{8, 0, 1};
inline constexpr QuadricFamily kQuadricSurfaceFibration{4, -2, 1};
inline constexpr QuadricFamily kConicFibrationOnLine{3, -1, 1};

}  // namespace twistlat
