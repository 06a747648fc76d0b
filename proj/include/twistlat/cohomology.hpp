#pragma once

#include <iosfwd>
#include <string>

#include "twistlat/rational.hpp"

namespace twistlat {

// Intersection numbers on the degree-2 span {h, B} of the surface.
// two_Bh = 2 B.h and four_Bsq = 4 B^2, so B.h = two_Bh / 2 and B^2 = four_Bsq / 4.
struct IntersectionData {
  long h_squared = 2;
  long two_Bh = 0;
  long four_Bsq = 0;

  Rational h_dot_h() const { return Rational(h_squared); }
  Rational h_dot_B() const { return Rational(two_Bh, 2); }
  Rational B_dot_B() const { return Rational(four_Bsq, 4); }
};

// Even class r + a_h h + a_B B + s pt on the surface S.
struct SurfaceClass {
  Rational r;
  Rational a_h;
  Rational a_B;
  Rational s;

  static SurfaceClass unit() { return {1, 0, 0, 0}; }
  static SurfaceClass h() { return {0, 1, 0, 0}; }
  static SurfaceClass B() { return {0, 0, 1, 0}; }
  static SurfaceClass point() { return {0, 0, 0, 1}; }

  bool is_degree2() const { return r.is_zero() && s.is_zero(); }

  SurfaceClass operator-() const { return {-r, -a_h, -a_B, -s}; }
  friend SurfaceClass operator+(const SurfaceClass& x, const SurfaceClass& y) {
    return {x.r + y.r, x.a_h + y.a_h, x.a_B + y.a_B, x.s + y.s};
  }
  friend SurfaceClass operator-(const SurfaceClass& x, const SurfaceClass& y) { return x + (-y); }
  friend SurfaceClass operator*(const Rational& c, const SurfaceClass& x) {
    return {c * x.r, c * x.a_h, c * x.a_B, c * x.s};
  }
  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;

  std::string to_string() const;
};

// Class r + a_H H + s pt on the plane A = P^2.
struct BaseClass {
  Rational r;
  Rational a_H;
  Rational s;

  static BaseClass unit() { return {1, 0, 0}; }
  static BaseClass hyperplane() { return {0, 1, 0}; }
  static BaseClass point() { return {0, 0, 1}; }

  BaseClass operator-() const { return {-r, -a_H, -s}; }
  friend BaseClass operator+(const BaseClass& x, const BaseClass& y) {
    return {x.r + y.r, x.a_H + y.a_H, x.s + y.s};
  }
  friend BaseClass operator-(const BaseClass& x, const BaseClass& y) { return x + (-y); }
  friend BaseClass operator*(const Rational& c, const BaseClass& x) { return {c * x.r, c * x.a_H, c * x.s}; }
  // Cup product in H*(P^2): H.H = pt, anything of degree > 4 vanishes.
  friend BaseClass operator*(const BaseClass& x, const BaseClass& y);
  friend bool operator==(const BaseClass&, const BaseClass&) = default;

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const SurfaceClass& x);
std::ostream& operator<<(std::ostream& os, const BaseClass& x);

// Intersection number of two degree-2 classes (only a_h, a_B are read).
Rational intersect_degree2(const SurfaceClass& x, const SurfaceClass& y, const IntersectionData& data);

// Graded cup product truncated above degree 4.
SurfaceClass multiply(const SurfaceClass& x, const SurfaceClass& y, const IntersectionData& data);

// v -> sum_k i^k v_k, i.e. negate the degree-2 part.
SurfaceClass dual(const SurfaceClass& x);

// 1 + eta + eta^2/2. Throws std::invalid_argument if eta has degree-0 or degree-4 part.
SurfaceClass exp_degree2(const SurfaceClass& eta, const IntersectionData& data);

// Formal square root 1 + x/2 - x^2/8 of a = 1 + x. Throws std::invalid_argument if r != 1.
SurfaceClass sqrt_unit(const SurfaceClass& a, const IntersectionData& data);

// Degree-4 coefficient of dual(a) . b . exp(c1_coeff h / 2).
Rational mukai_pairing(const SurfaceClass& a, const SurfaceClass& b, const Rational& c1_coeff,
                       const IntersectionData& data);

// Expanded form of the pairing for c1 = -h:
//   (h^2/8) r1 r2 + r1 s2 + r2 s1 - eta1.eta2 - (1/2) r1 eta2.h + (1/2) r2 eta1.h
Rational mukai_pairing_expanded(const SurfaceClass& a, const SurfaceClass& b, const IntersectionData& data);

// Pushforward along the double cover S -> P^2: (r, a_h, s) -> (2r, 2a_h, s).
// Throws std::invalid_argument if a_B != 0.
BaseClass pushforward(const SurfaceClass& x);

// Pullback along the double cover: (r, a_H, s) -> (r, a_H h, 2s pt).
SurfaceClass pullback(const BaseClass& y);

// Degree-4 coefficient of a base class.
inline Rational integrate(const BaseClass& y) { return y.s; }
inline Rational integrate(const SurfaceClass& x) { return x.s; }

// ch(O(k)) on P^2 and on the double plane.
BaseClass chern_character_line_bundle(long k);

}  // namespace twistlat
