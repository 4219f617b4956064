#include <stdexcept>

#include "doctest.h"
#include "invstab/charge.hpp"

using namespace invstab;

namespace {
ExactComplex c(long re_n, long re_d, long im_n, long im_d) { return ExactComplex(Rational(re_n, re_d), Rational(im_n, im_d)); }
}  // namespace

TEST_CASE("charge literals") {
  CHECK(parse_complex("1/4+1/4*i") == c(1, 4, 1, 4));
  CHECK(parse_complex("i") == ExactComplex(0, 1));
  CHECK(parse_complex("-1/2*i") == c(0, 1, -1, 2));
  CHECK(parse_complex("-3") == ExactComplex(-3));
  CHECK(parse_complex(" 2 - i ") == ExactComplex(2, -1));
  CHECK(parse_complex("-i") == ExactComplex(0, -1));
  CHECK(parse_complex("2/4*i+1") == c(1, 1, 1, 2));
  CHECK_THROWS_AS(parse_complex("0.25"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1+2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("2i"), std::invalid_argument);
}

TEST_CASE("literal round trip") {
  for (const ExactComplex& z : {c(1, 4, 1, 4), c(-3, 7, 0, 1), c(0, 1, -5, 2), c(9, 2, 1, 3)}) {
    CHECK(parse_complex(z.str()) == z);
  }
}

TEST_CASE("phase comparison") {
  CHECK(phase_cmp(ExactComplex(1, 1), ExactComplex(-1, 1)) == std::strong_ordering::less);
  CHECK(phase_cmp(ExactComplex(-1), ExactComplex(0, 1)) == std::strong_ordering::greater);
  CHECK(phase_cmp(ExactComplex(2, 3), ExactComplex(4, 6)) == std::strong_ordering::equal);
  CHECK_THROWS_AS(phase_cmp(ExactComplex(1, -1), ExactComplex(0, 1)), std::domain_error);
  CHECK_THROWS_AS(phase_cmp(ExactComplex(1), ExactComplex(0, 1)), std::domain_error);
  CHECK_THROWS_AS(phase_cmp(ExactComplex(), ExactComplex(0, 1)), std::domain_error);
  CHECK(in_H(ExactComplex(-1)));
  CHECK_FALSE(in_H(ExactComplex(1)));
}

TEST_CASE("H^reg membership") {
  CHECK(is_in_hreg({ExactComplex(1), ExactComplex(0, 1)}));
  // n z0 + (n+1) z1 = 0 with n = 2
  CHECK_FALSE(is_in_hreg({ExactComplex(3), ExactComplex(-2)}));
  CHECK_FALSE(is_in_hreg({ExactComplex(-5), ExactComplex(4)}));
  CHECK_FALSE(is_in_hreg({ExactComplex(1, 1), ExactComplex(-1, -1)}));
  CHECK_FALSE(is_in_hreg({ExactComplex(0), ExactComplex(1)}));
  CHECK(is_in_hreg({ExactComplex(5), ExactComplex(-3)}));   // ratio -5/3
  CHECK(is_in_hreg({ExactComplex(2), ExactComplex(-2, 1)}));
}

TEST_CASE("normalization") {
  const CentralCharge Z{ExactComplex(1, 2), ExactComplex(3, -1)};
  const Normalized n = normalize(Z);
  CHECK(evaluate(n.charge, delta()) == ExactComplex(0, 1));
  CHECK(n.scalar * Z.z0 == n.charge.z0);
  CHECK_THROWS_AS(normalize({ExactComplex(1), ExactComplex(-1)}), std::domain_error);
}

TEST_CASE("support constant") {
  CHECK(support_constant({ExactComplex(1), ExactComplex(0, 1)}) == 1);
  CHECK_THROWS_AS(support_constant({ExactComplex(1), ExactComplex(-1)}), std::domain_error);
  // The supremum dominates every sampled ratio and the bound dominates its root.
  const CentralCharge Z{c(1, 3, 1, 5), c(-1, 3, 3, 10)};
  const Rational sup = support_ratio_sup(Z);
  const Rational C = support_constant(Z);
  CHECK(C * C >= sup);
  for (long n = 0; n < 200; ++n) {
    for (const QuotClass& v : {QuotClass{{n, n + 1}}, QuotClass{{n + 1, n}}, QuotClass{{1, 1}}}) {
      const Rational norm = Rational(v[0] * v[0] + v[1] * v[1]);
      CHECK(norm <= sup * evaluate(Z, v).norm2());
    }
  }
}

TEST_CASE("t-action lift") {
  const CentralCharge Z{c(1, 4, 1, 4), c(-1, 4, 1, 4)};
  const LiftedGL g = t_action_lift(Z);
  CHECK(g.matrix.det() > 0);
  const CentralCharge moved = act_lifted(Z, g);
  CHECK(moved.z0 == -Z.z1);
  CHECK(moved.z1 == Z.z0 + Rational(2) * Z.z1);
  CHECK(g.matrix.apply(c(0, 1, 1, 2)) == c(0, 1, 1, 2));
  CHECK_THROWS_AS(t_action_lift({c(1, 4, 1, 4), c(1, 4, 1, 4)}), std::domain_error);           // dependent
  CHECK_THROWS_AS(t_action_lift({c(1, 2, 1, 2), c(-1, 2, 1, 2)}), std::domain_error);          // not normalized
  CHECK_THROWS_AS(t_action_lift({c(-1, 4, 1, 4), c(1, 4, 1, 4)}), std::domain_error);          // U-
  CHECK_THROWS_AS(LiftedGL::scalar(0), std::domain_error);
  CHECK(act_lifted(Z, LiftedGL::scalar(2)).z0 == Rational(1, 2) * Z.z0);
}

TEST_CASE("pullback along quotient actions") {
  const CentralCharge Z{ExactComplex(1, 1), ExactComplex(-1, 2)};
  const CentralCharge P = pullback(Z, quotient_action(t()));
  CHECK(P.z0 == Rational(2) * Z.z0 + Z.z1);
  CHECK(P.z1 == -Z.z0);
  CHECK(pullback(P, quotient_action(t_psi())) == Z);
}
