#include "twistlat/twisted_lattice.hpp"

#include <stdexcept>

#include "twistlat/double_plane.hpp"

namespace twistlat {

namespace {

constexpr long kBranchOctic = 4;

}  // namespace

std::array<SurfaceClass, 3> lattice_basis(const TwistParams& twist) {
  const IntersectionData data = twist.intersection_data();
  const SurfaceClass sqrt_td = todd_and_sqrt(kBranchOctic).second;
  const SurfaceClass two_plus_2B{2, 0, 2, 0};
  return {
      multiply(sqrt_td, two_plus_2B, data),
      multiply(sqrt_td, SurfaceClass::h(), data),
      multiply(sqrt_td, SurfaceClass::point(), data),
  };
}

GramMatrix gram_matrix(const TwistParams& twist) {
  const IntersectionData data = twist.intersection_data();
  const Rational c1_coeff = surface_geometry(kBranchOctic).c1_coeff;
  const auto basis = lattice_basis(twist);

  GramMatrix gram;
  gram.m = twist.m;
  gram.n = twist.n;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Rational direct = mukai_pairing(basis[i], basis[j], c1_coeff, data);
      const Rational expanded = mukai_pairing_expanded(basis[i], basis[j], data);
      if (direct != expanded) {
        throw std::logic_error("gram_matrix: pairing mismatch at (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + "): " + direct.to_string() + " vs " +
                               expanded.to_string());
      }
      if (!direct.is_integer()) {
        throw std::logic_error("gram_matrix: non-integral entry " + direct.to_string());
      }
      gram.entries[i][j] = direct.to_int64();
    }
  }
  return gram;
}

bool in_integral_twisted_lattice(const Rational& r, const Rational& d, const Rational& s, const TwistParams& twist) {
  if (!r.is_integer() || !d.is_integer()) return false;
  if (r.numerator() % 2 != 0) return false;
  const Rational top = r * Rational(twist.n, 8) + d * Rational(twist.m, 2) + s;
  return top.is_integer();
}

TwistParams shift_B(const TwistParams& twist, long c, bool add_half_h) {
  // (B + c h).h = B.h + 2c and (B + c h)^2 = B^2 + c m + 2c^2, with h^2 = 2.
  TwistParams shifted{twist.m + 4 * c, twist.n + 4 * c * twist.m + 8 * c * c};
  if (add_half_h) {
    // (B + h/2)^2 = B^2 + B.h + 1/2
    shifted = {shifted.m + 2, shifted.n + 2 * shifted.m + 2};
  }
  return shifted;
}

BaseClass wedge2_chern_character(const BaseClass& ch) {
  if (ch.r != Rational(4)) {
    throw std::invalid_argument("wedge2_chern_character: expected rank 4, got " + ch.r.to_string());
  }
  const Rational c1 = ch.a_H;
  return {6, Rational(3) * c1, Rational(2) * ch.s + c1 * c1 / Rational(2)};
}

GrrLedger grr_ledger() {
  GrrLedger ledger;

  const BaseClass ch_O = chern_character_line_bundle(0);
  ledger.ch_E = Rational(6) * ch_O - Rational(2) * chern_character_line_bundle(1);
  ledger.ch_wedge2E = wedge2_chern_character(ledger.ch_E);
  ledger.ch_wedge2E_twist = ledger.ch_wedge2E * chern_character_line_bundle(-1);

  // wedge^4 E = det E = O(c1), so wedge^4 E (x) O(-2) = O(c1 - 2).
  const long det_degree = ledger.ch_E.a_H.to_int64();
  ledger.ch_B0 = ch_O + ledger.ch_wedge2E_twist + chern_character_line_bundle(det_degree - 2);

  const BaseClass td_plane{1, Rational(3, 2), 1};
  ledger.rhs = ledger.ch_B0 * td_plane;

  // ch(A) = 4 + a pt for the rank-4 Azumaya algebra; take a = 0 and solve below.
  const SurfaceClass td_S = todd_and_sqrt(kBranchOctic).first;
  const SurfaceClass ch_A{4, 0, 0, 0};
  ledger.lhs = pushforward(multiply(ch_A, td_S, IntersectionData{}));

  if (ledger.lhs.r != ledger.rhs.r || ledger.lhs.a_H != ledger.rhs.a_H) {
    throw std::logic_error("grr_ledger: rank or degree-2 parts disagree: " + ledger.lhs.to_string() + " vs " +
                           ledger.rhs.to_string());
  }
  ledger.a_solved = (ledger.rhs.s - ledger.lhs.s).to_int64();

  // a = 4s - (2B + k h)^2 = 4s - n - 2k(k + m). With m odd the last term vanishes mod 4.
  ledger.cross_term_divisible = true;
  for (long m = -9; m <= 9; m += 2) {
    for (long k = -10; k <= 10; ++k) {
      if ((2 * k * (k + m)) % 4 != 0) ledger.cross_term_divisible = false;
    }
  }
  if (!ledger.cross_term_divisible) throw std::logic_error("grr_ledger: cross term not divisible by 4");

  // n = -a (mod 4)
  const long n_residue = ((-ledger.a_solved) % 4 + 4) % 4;
  ledger.b_squared_fraction = Rational(n_residue, 4);
  return ledger;
}

}  // namespace twistlat
