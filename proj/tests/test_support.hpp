#pragma once

#include <random>
#include <utility>

#include "twistlat/cohomology.hpp"
#include "twistlat/twisted_lattice.hpp"

namespace twistlat::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_num = 12, long max_den = 8) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline SurfaceClass random_surface_class(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline BaseClass random_base_class(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline IntersectionData random_intersection_data(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(-20, 20);
  return {2, small(rng), small(rng)};
}

inline Matrix3 random_matrix(std::mt19937_64& rng, long max_abs) {
  std::uniform_int_distribution<long> entry(-max_abs, max_abs);
  Matrix3 g{};
  for (auto& row : g) {
    for (auto& x : row) x = entry(rng);
  }
  return g;
}

inline Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

inline Matrix3 transpose(const Matrix3& a) {
  Matrix3 t{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  }
  return t;
}

// Product of random elementary matrices, with its inverse.
inline std::pair<Matrix3, Matrix3> random_unimodular(std::mt19937_64& rng) {
  Matrix3 u{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Matrix3 inverse = u;
  std::uniform_int_distribution<int> index(0, 2);
  std::uniform_int_distribution<long> factor(-2, 2);
  for (int step = 0; step < 5; ++step) {
    Matrix3 e{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    Matrix3 e_inv = e;
    const int i = index(rng);
    int j = index(rng);
    while (j == i) j = index(rng);
    switch (rng() % 3) {
      case 0: {
        const long f = factor(rng);
        e[i][j] = f;
        e_inv[i][j] = -f;
        break;
      }
      case 1:
        std::swap(e[i], e[j]);
        std::swap(e_inv[i], e_inv[j]);
        break;
      default:
        e[i][i] = -1;
        e_inv[i][i] = -1;
        break;
    }
    u = multiply(u, e);
    inverse = multiply(e_inv, inverse);
  }
  return {u, inverse};
}

}  // namespace twistlat::testing
