#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "twistlat/cohomology.hpp"

namespace twistlat {

using Vector3 = std::array<std::int64_t, 3>;
using Matrix3 = std::array<Vector3, 3>;

// B-field data: m = 2 B.h, n = 4 B^2.
struct TwistParams {
  long m = 1;
  long n = 3;

  // {B.h} and {B^2}.
  Rational fractional_Bh() const { return Rational(m, 2).fractional_part(); }
  Rational fractional_Bsq() const { return Rational(n, 4).fractional_part(); }

  IntersectionData intersection_data() const { return {2, m, n}; }
  friend bool operator==(const TwistParams&, const TwistParams&) = default;
};

// Euler pairing in a fixed basis. Row index is the first argument of the pairing.
struct GramMatrix {
  std::array<std::string, 3> basis{"2+2B", "h", "pt"};
  std::optional<long> m;
  std::optional<long> n;
  Matrix3 entries{};

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;
};

// Chain of classes leading to {B^2} through Grothendieck-Riemann-Roch on the
// double cover of the plane; every field is recomputed from the previous ones.
struct GrrLedger {
  BaseClass ch_E;                // ch(E), 0 -> E -> O^6 -> O(1)^2 -> 0
  BaseClass ch_wedge2E;          // ch(wedge^2 E)
  BaseClass ch_wedge2E_twist;    // ch(wedge^2 E (x) O(-1))
  BaseClass ch_B0;               // ch of the even Clifford algebra
  BaseClass lhs;                 // pi_*(ch(A) td(S)) with the unknown a set to 0
  BaseClass rhs;                 // ch(B0) td(P^2)
  long a_solved = 0;             // lhs.s + a = rhs.s
  bool cross_term_divisible = false;  // 2k(k + m) = 0 mod 4 for odd m, all sampled k
  Rational b_squared_fraction;   // {B^2}

  friend bool operator==(const GrrLedger&, const GrrLedger&) = default;
};

// Normalised basis sqrt(td(S)) * (2 + 2B), sqrt(td(S)) * h, sqrt(td(S)) * pt of the
// branch-octic double plane.
std::array<SurfaceClass, 3> lattice_basis(const TwistParams& twist);

// Gram matrix via the cup-product definition of the pairing, cross-checked entry by
// entry against the expanded formula. A disagreement throws std::logic_error.
GramMatrix gram_matrix(const TwistParams& twist);

// Whether exp(B)(r + d h + s pt) is an integral class.
bool in_integral_twisted_lattice(const Rational& r, const Rational& d, const Rational& s, const TwistParams& twist);

// B -> B + c h, then B -> B + h/2 if add_half_h.
TwistParams shift_B(const TwistParams& twist, long c, bool add_half_h);

// ch(wedge^2 E) = 6 + 3 c1 + (2 ch2 + c1^2 / 2) pt for E of rank 4.
// Throws std::invalid_argument if ch.r != 4.
BaseClass wedge2_chern_character(const BaseClass& ch);

GrrLedger grr_ledger();

}  // namespace twistlat
