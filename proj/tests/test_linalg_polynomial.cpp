#include <stdexcept>

#include "doctest.h"
#include "invstab/linalg.hpp"
#include "invstab/polynomial.hpp"

using namespace invstab;

namespace {
Polynomial poly(std::initializer_list<long> low_to_high) {
  std::vector<Rational> c;
  for (long v : low_to_high) c.emplace_back(v);
  return Polynomial(c);
}
}  // namespace

TEST_CASE("rational rref, rank, nullspace, inverse") {
  const RationalField f;
  Matrix<RationalField> m = Matrix<RationalField>::zeros(f, 3, 3);
  const long vals[] = {1, 2, 3, 2, 4, 6, 1, 0, 1};
  for (std::size_t i = 0; i < 9; ++i) m.data[i] = vals[i];
  CHECK(rank(f, m) == 2);
  const auto ns = nullspace(f, m);
  REQUIRE(ns.size() == 1);
  for (std::size_t r = 0; r < 3; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < 3; ++c) s += m(r, c) * ns[0][c];
    CHECK(s == 0);
  }
  CHECK(determinant(f, m) == 0);
  CHECK_THROWS_AS(inverse(f, m), std::domain_error);
  m(1, 1) = 5;
  const auto inv = inverse(f, m);
  CHECK(multiply(f, m, inv) == Matrix<RationalField>::identity(f, 3));
  CHECK(determinant(f, m) == -2);
}

TEST_CASE("prime field arithmetic") {
  const PrimeField f(7);
  for (std::int64_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_int(-3) == 4);
  CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
  Matrix<PrimeField> m(2, 2, 0);
  m.data = {1, 2, 3, 4};
  CHECK(rank(f, m) == 2);
  m.data = {1, 2, 3, 6};
  CHECK(rank(f, m) == 1);
  CHECK(determinant(f, m) == 0);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial p = poly({-2, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(p.str() == "x^2-2");
  CHECK((p * p).eval(2) == 4);
  CHECK(Polynomial().degree() == -1);
  const auto [q, r] = divmod(poly({-1, 0, 0, 1}), poly({-1, 1}));
  CHECK(q == poly({1, 1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
  CHECK(poly({2, 4}).monic() == Polynomial({Rational(1, 2), Rational(1)}));
}

TEST_CASE("factorization over Q") {
  // (x - 1/2)^2 (x^2 + 1) (x^2 - 3) * 4
  const Polynomial f = poly({-1, 2}) * poly({-1, 2}) * poly({1, 0, 1}) * poly({-3, 0, 1});
  const auto fac = factor_over_q(f);
  Polynomial back(Rational(1));
  for (const auto& [g, m] : fac) {
    CHECK(g.leading() == 1);
    for (int k = 0; k < m; ++k) back = back * g;
  }
  CHECK(back == f.monic());
  REQUIRE(fac.size() == 3);
  int linear = 0;
  for (const auto& [g, m] : fac) {
    if (g.degree() == 1) {
      ++linear;
      CHECK(m == 2);
      CHECK(g == Polynomial({Rational(-1, 2), Rational(1)}));
    }
  }
  CHECK(linear == 1);
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2) has no rational root
  const auto f4 = factor_over_q(poly({4, 0, 0, 0, 1}));
  CHECK(f4.size() == 2);
}

TEST_CASE("Smith invariant factors of a pencil") {
  // B - xA with A = I and B = J_2(3) (+) (5)
  PolyMatrix m(3, std::vector<Polynomial>(3));
  const Polynomial x = Polynomial::x();
  m[0][0] = Polynomial(Rational(3)) - x;
  m[1][0] = Polynomial(Rational(1));
  m[1][1] = Polynomial(Rational(3)) - x;
  m[2][2] = Polynomial(Rational(5)) - x;
  const auto inv = invariant_factors(m);
  REQUIRE(inv.size() == 3);
  CHECK(inv[0] == poly({1}));
  CHECK(inv[1] == poly({1}));
  CHECK(inv[2] == poly({-3, 1}) * poly({-3, 1}) * poly({-5, 1}));
}
