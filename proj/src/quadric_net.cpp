#include "twistlat/quadric_net.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace twistlat {

long discriminant_degree(const QuadricFamily& family) {
  return -2 * family.det_degree + family.rank * family.twist_degree;
}

long h0_on_line(const SplittingType& type) {
  long total = 0;
  for (long a : type) total += std::max(a + 1, 0L);
  return total;
}

std::vector<SplittingType> splitting_types(long rank, long degree, bool subbundle_of_trivial,
                                           std::optional<long> h0) {
  if (rank < 1) throw std::invalid_argument("splitting_types: rank must be >= 1, got " + std::to_string(rank));
  if (h0 && *h0 < 0) return {};
  if (!subbundle_of_trivial && !h0) {
    throw std::invalid_argument("splitting_types: unbounded enumeration; give h0 or require a_i <= 0");
  }

  // Every part is at most `upper`; a part a >= 0 alone contributes a + 1 to h0.
  long upper = subbundle_of_trivial ? 0 : *h0 - 1;
  if (h0) upper = std::min(upper, *h0 - 1);

  std::vector<SplittingType> result;
  SplittingType current;
  // Parts are chosen in non-increasing order; `cap` bounds the next part.
  std::function<void(long, long, long)> place = [&](long remaining_parts, long remaining_degree, long cap) {
    if (remaining_parts == 0) {
      if (remaining_degree != 0) return;
      if (h0 && h0_on_line(current) != *h0) return;
      result.push_back(current);
      return;
    }
    // The next part a satisfies a <= cap and the rest (each <= a) must reach remaining_degree,
    // so remaining_degree <= remaining_parts * a, i.e. a >= ceil(remaining_degree / remaining_parts).
    const long lowest = remaining_degree >= 0 ? (remaining_degree + remaining_parts - 1) / remaining_parts
                                              : -((-remaining_degree) / remaining_parts);
    for (long a = cap; a >= lowest; --a) {
      current.push_back(a);
      place(remaining_parts - 1, remaining_degree - a, a);
      current.pop_back();
    }
  };
  place(rank, degree, upper);
  return result;
}

HeckeParity hecke_degree_parity(long base_degree, long modifications) {
  if (modifications < 0) {
    throw std::invalid_argument("hecke_degree_parity: modifications must be >= 0");
  }
  const long degree = 2 * base_degree + modifications;
  return {degree, Rational(degree, 2).fractional_part()};
}

long special_point_census(const QuadricFamily& quadric_surfaces, const QuadricFamily& conics) {
  return discriminant_degree(quadric_surfaces) + discriminant_degree(conics);
}

}  // namespace twistlat
