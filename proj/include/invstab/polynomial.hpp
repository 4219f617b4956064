#pragma once

// Univariate polynomials over Q, with the pieces needed for the regular part
// of a matrix pencil: division, gcd, Smith normal form of polynomial matrices
// and factorization into irreducibles.

#include <string>
#include <utility>
#include <vector>

#include "invstab/rational.hpp"

namespace invstab {

class Polynomial {
 public:
  Polynomial() = default;
  /// Coefficients from the constant term upward.
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly

  static Polynomial x();
  static Polynomial monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator<(const Polynomial& o) const;

  Rational eval(const Rational& x) const;
  Polynomial monic() const;
  /// Polynomial with the smallest integer coefficients that is a positive
  /// rational multiple of this one.
  Polynomial primitive() const;
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// (quotient, remainder); throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Irreducible monic factors over Q with multiplicities, sorted by
/// (degree, coefficients). Throws std::domain_error on the zero polynomial.
std::vector<std::pair<Polynomial, int>> factor_over_q(const Polynomial& f);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Nonzero invariant factors (monic, each dividing the next) of a polynomial
/// matrix; their count is the rank.
std::vector<Polynomial> invariant_factors(PolyMatrix m);

}  // namespace invstab
