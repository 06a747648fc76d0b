#include "twistlat/cohomology.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twistlat {

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& coeff, const char* symbol) {
  if (coeff.is_zero()) return;
  if (first) {
    if (coeff.sign() < 0) os << "-";
  } else {
    os << (coeff.sign() < 0 ? " - " : " + ");
  }
  const Rational magnitude = coeff.sign() < 0 ? -coeff : coeff;
  if (symbol[0] == '\0') {
    os << magnitude;
  } else {
    if (magnitude != Rational(1)) os << magnitude << "*";
    os << symbol;
  }
  first = false;
}

}  // namespace

std::string SurfaceClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  append_term(os, first, r, "");
  append_term(os, first, a_h, "h");
  append_term(os, first, a_B, "B");
  append_term(os, first, s, "pt");
  if (first) os << "0";
  return os.str();
}

std::string BaseClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  append_term(os, first, r, "");
  append_term(os, first, a_H, "H");
  append_term(os, first, s, "pt");
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SurfaceClass& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const BaseClass& x) { return os << x.to_string(); }

BaseClass operator*(const BaseClass& x, const BaseClass& y) {
  return {x.r * y.r, x.r * y.a_H + x.a_H * y.r, x.r * y.s + x.s * y.r + x.a_H * y.a_H};
}

Rational intersect_degree2(const SurfaceClass& x, const SurfaceClass& y, const IntersectionData& data) {
  return x.a_h * y.a_h * data.h_dot_h() + (x.a_h * y.a_B + x.a_B * y.a_h) * data.h_dot_B() +
         x.a_B * y.a_B * data.B_dot_B();
}

SurfaceClass multiply(const SurfaceClass& x, const SurfaceClass& y, const IntersectionData& data) {
  return {
      x.r * y.r,
      x.r * y.a_h + x.a_h * y.r,
      x.r * y.a_B + x.a_B * y.r,
      x.r * y.s + x.s * y.r + intersect_degree2(x, y, data),
  };
}

SurfaceClass dual(const SurfaceClass& x) { return {x.r, -x.a_h, -x.a_B, x.s}; }

SurfaceClass exp_degree2(const SurfaceClass& eta, const IntersectionData& data) {
  if (!eta.is_degree2()) {
    throw std::invalid_argument("exp_degree2: class " + eta.to_string() + " is not purely of degree 2");
  }
  return {1, eta.a_h, eta.a_B, intersect_degree2(eta, eta, data) / Rational(2)};
}

SurfaceClass sqrt_unit(const SurfaceClass& a, const IntersectionData& data) {
  if (a.r != Rational(1)) {
    throw std::invalid_argument("sqrt_unit: leading coefficient of " + a.to_string() + " is not 1");
  }
  const SurfaceClass x = a - SurfaceClass::unit();
  const SurfaceClass x2 = multiply(x, x, data);
  return SurfaceClass::unit() + Rational(1, 2) * x - Rational(1, 8) * x2;
}

Rational mukai_pairing(const SurfaceClass& a, const SurfaceClass& b, const Rational& c1_coeff,
                       const IntersectionData& data) {
  const SurfaceClass half_c1{0, c1_coeff / Rational(2), 0, 0};
  const SurfaceClass product = multiply(multiply(dual(a), b, data), exp_degree2(half_c1, data), data);
  return integrate(product);
}

Rational mukai_pairing_expanded(const SurfaceClass& a, const SurfaceClass& b, const IntersectionData& data) {
  const SurfaceClass h = SurfaceClass::h();
  return Rational(data.h_squared, 8) * a.r * b.r + a.r * b.s + b.r * a.s - intersect_degree2(a, b, data) -
         Rational(1, 2) * a.r * intersect_degree2(b, h, data) + Rational(1, 2) * b.r * intersect_degree2(a, h, data);
}

BaseClass pushforward(const SurfaceClass& x) {
  if (!x.a_B.is_zero()) {
    throw std::invalid_argument("pushforward: class " + x.to_string() + " has a nonzero B component");
  }
  return {Rational(2) * x.r, Rational(2) * x.a_h, x.s};
}

SurfaceClass pullback(const BaseClass& y) { return {y.r, y.a_H, 0, Rational(2) * y.s}; }

BaseClass chern_character_line_bundle(long k) { return {1, Rational(k), Rational(k * k, 2)}; }

}  // namespace twistlat
