#pragma once

// Exact central charges on K0bar. Every decision (phase order, wall
// membership, hyperplane avoidance) is taken on exact rationals; phases are
// never materialized as floating-point angles.

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "invstab/k_lattice.hpp"
#include "invstab/rational.hpp"

namespace invstab {

struct ExactComplex {
  Rational re;
  Rational im;

  ExactComplex() = default;
  ExactComplex(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  static ExactComplex i_unit() { return ExactComplex(0, 1); }

  ExactComplex operator+(const ExactComplex& o) const { return {re + o.re, im + o.im}; }
  ExactComplex operator-(const ExactComplex& o) const { return {re - o.re, im - o.im}; }
  ExactComplex operator-() const { return {-re, -im}; }
  ExactComplex operator*(const ExactComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  /// Throws std::domain_error on division by zero.
  ExactComplex operator/(const ExactComplex& o) const;
  friend ExactComplex operator*(const Rational& k, const ExactComplex& z) { return {k * z.re, k * z.im}; }

  bool operator==(const ExactComplex& o) const { return re == o.re && im == o.im; }

  ExactComplex conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  /// Canonical literal "a+b*i" / "a-b*i" with rational a, b.
  std::string str() const;
};

/// Parses the charge literal grammar: a real part, an imaginary part "c/d*i",
/// or both joined by + or -, e.g. "1/4+1/4*i", "-3", "i", "-1/2*i".
/// Throws std::invalid_argument on non-rational input.
ExactComplex parse_complex(std::string_view text);

/// re(a) im(b) - im(a) re(b); positive iff arg b is counterclockwise from arg a.
Rational cross(const ExactComplex& a, const ExactComplex& b);

/// Semi-closed upper half plane: Im > 0, or Im = 0 and Re < 0.
bool in_H(const ExactComplex& z);

/// Orders the phases of two nonzero points of H. Throws std::domain_error on
/// zero input or input outside H.
std::strong_ordering phase_cmp(const ExactComplex& z1, const ExactComplex& z2);

/// Z(gamma_0) = Z(gamma_2) = z0, Z(gamma_1) = Z(gamma_3) = z1.
struct CentralCharge {
  ExactComplex z0;
  ExactComplex z1;

  bool operator==(const CentralCharge& o) const { return z0 == o.z0 && z1 == o.z1; }
  std::string str() const;
};

ExactComplex evaluate(const CentralCharge& Z, const KClass& v);
ExactComplex evaluate(const CentralCharge& Z, const QuotClass& v);

/// Precomposition Z o m for an integer action m on K0bar.
CentralCharge pullback(const CentralCharge& Z, const IntMatrix2& m);

/// Z(v) != 0 for every v in the infinite set Delta, decided by a finite test.
bool is_in_hreg(const CentralCharge& Z);

struct Normalized {
  ExactComplex scalar;  // c with c * Z(delta) = i
  CentralCharge charge;
};
/// Rescales Z so that Z(delta) = i. Throws std::domain_error when Z(delta) = 0.
Normalized normalize(const CentralCharge& Z);

/// Rational C with |v|^2 <= C^2 |Z(v)|^2 for all v in Delta (Euclidean norm on
/// K0bar). Exact square root when the supremum is a rational square, a dyadic
/// upper bound otherwise. Throws std::domain_error when Z is not in H^reg.
Rational support_constant(const CentralCharge& Z);

/// Supremum of |v|^2 / |Z(v)|^2 over Delta, exactly.
Rational support_ratio_sup(const CentralCharge& Z);

struct RationalMatrix2 {
  Rational a00, a01, a10, a11;

  Rational det() const { return a00 * a11 - a01 * a10; }
  RationalMatrix2 inverse() const;
  RationalMatrix2 operator*(const RationalMatrix2& o) const;
  bool operator==(const RationalMatrix2& o) const {
    return a00 == o.a00 && a01 == o.a01 && a10 == o.a10 && a11 == o.a11;
  }
  /// Acts on C = R^2.
  ExactComplex apply(const ExactComplex& z) const;
};

/// An element of the universal cover of GL+(2,R): a matrix with positive
/// determinant, plus the integer anchor n with f(1/2) in (n - 1/2, n + 1/2].
struct LiftedGL {
  RationalMatrix2 matrix;
  int anchor = 0;

  static LiftedGL identity() { return LiftedGL{{1, 0, 0, 1}, 0}; }
  static LiftedGL scalar(const Rational& k);
  /// Throws std::domain_error unless det > 0.
  void validate() const;
};

/// Z_g = g^{-1} Z applied to z0 and z1.
CentralCharge act_lifted(const CentralCharge& Z, const LiftedGL& g);

/// The element g with g(z0) = 2 z0 + z1, g(z1) = -z0 and f(1/2) = 1/2. On a
/// normalized charge in U+ the autoequivalence T acts as the right action of
/// this g. Throws std::domain_error if z0, z1 are linearly dependent over R,
/// if Z is not normalized, or if Z is not in U+.
LiftedGL t_action_lift(const CentralCharge& Z);

}  // namespace invstab
