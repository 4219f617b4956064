#include "invstab/charge.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace invstab {

ExactComplex ExactComplex::operator/(const ExactComplex& o) const {
  const Rational n = o.norm2();
  if (sgn(n) == 0) throw std::domain_error("division by zero complex number");
  const ExactComplex p = *this * o.conj();
  return {p.re / n, p.im / n};
}

std::string ExactComplex::str() const {
  std::string out = to_string(re);
  if (sgn(im) < 0) {
    out += "-" + to_string(Rational(-im));
  } else {
    out += "+" + to_string(im);
  }
  return out + "*i";
}

namespace {

// One signed term: a rational, optionally followed by "*i", or a bare "i".
struct Term {
  Rational value;
  bool imaginary = false;
};

Term parse_term(std::string_view body, bool negative, std::string_view whole) {
  Term term;
  if (body == "i") {
    term.value = 1;
    term.imaginary = true;
  } else if (body.size() > 2 && body.substr(body.size() - 2) == "*i") {
    term.value = parse_rational(body.substr(0, body.size() - 2));
    term.imaginary = true;
  } else {
    if (body.find('i') != std::string_view::npos) {
      throw std::invalid_argument("bad imaginary term in charge literal '" + std::string(whole) + "'");
    }
    term.value = parse_rational(body);
  }
  if (negative) term.value = -term.value;
  return term;
}

}  // namespace

ExactComplex parse_complex(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw std::invalid_argument("empty charge literal");

  // Split at + or - that are not the leading sign.
  std::vector<std::pair<bool, std::string_view>> pieces;
  std::string_view s = compact;
  std::size_t start = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    start = 1;
  }
  for (std::size_t i = start; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+' || s[i] == '-') {
      if (i == start) throw std::invalid_argument("malformed charge literal '" + std::string(text) + "'");
      pieces.emplace_back(negative, s.substr(start, i - start));
      if (i < s.size()) {
        negative = s[i] == '-';
        start = i + 1;
      }
    }
  }
  if (pieces.size() > 2) throw std::invalid_argument("too many terms in charge literal '" + std::string(text) + "'");

  ExactComplex z;
  bool seen_re = false;
  bool seen_im = false;
  for (const auto& [neg, body] : pieces) {
    const Term term = parse_term(body, neg, text);
    bool& seen = term.imaginary ? seen_im : seen_re;
    if (seen) throw std::invalid_argument("duplicate term in charge literal '" + std::string(text) + "'");
    seen = true;
    (term.imaginary ? z.im : z.re) = term.value;
  }
  return z;
}

Rational cross(const ExactComplex& a, const ExactComplex& b) { return a.re * b.im - a.im * b.re; }

bool in_H(const ExactComplex& z) { return sgn(z.im) > 0 || (sgn(z.im) == 0 && sgn(z.re) < 0); }

std::strong_ordering phase_cmp(const ExactComplex& z1, const ExactComplex& z2) {
  if (z1.is_zero() || z2.is_zero()) throw std::domain_error("phase of zero is undefined");
  if (!in_H(z1) || !in_H(z2)) throw std::domain_error("phase comparison outside the half plane H");
  // Both arguments lie in (0, pi], so the angle difference lies in (-pi, pi)
  // and its sign is the sign of the cross product.
  const int s = sgn(cross(z1, z2));
  if (s > 0) return std::strong_ordering::less;
  if (s < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string CentralCharge::str() const { return "(" + z0.str() + ", " + z1.str() + ")"; }

ExactComplex evaluate(const CentralCharge& Z, const KClass& v) { return evaluate(Z, project(v)); }

ExactComplex evaluate(const CentralCharge& Z, const QuotClass& v) {
  return Rational(static_cast<long>(v[0])) * Z.z0 + Rational(static_cast<long>(v[1])) * Z.z1;
}

CentralCharge pullback(const CentralCharge& Z, const IntMatrix2& m) {
  return CentralCharge{evaluate(Z, QuotClass{{m[0][0], m[1][0]}}), evaluate(Z, QuotClass{{m[0][1], m[1][1]}})};
}

bool is_in_hreg(const CentralCharge& Z) {
  // (1,0) and (0,1) lie in Delta, so both values must be nonzero. Otherwise
  // p z0 + q z1 = 0 for (p,q) in Delta iff z0 / z1 = -q/p, a negative rational
  // whose reduced numerator and denominator differ by at most one.
  if (Z.z0.is_zero() || Z.z1.is_zero()) return false;
  const ExactComplex ratio = Z.z0 / Z.z1;
  if (sgn(ratio.im) != 0 || sgn(ratio.re) >= 0) return true;
  const Rational r = -ratio.re;
  Integer diff = r.get_num() - r.get_den();
  return abs(diff) > 1;
}

Normalized normalize(const CentralCharge& Z) {
  const ExactComplex zd = evaluate(Z, delta());
  if (zd.is_zero()) throw std::domain_error("Z(delta) = 0: charge cannot be normalized");
  const ExactComplex c = ExactComplex::i_unit() / zd;
  return Normalized{c, CentralCharge{c * Z.z0, c * Z.z1}};
}

namespace {

// Upper bound on |x| for the real roots of a x^2 + b x + c (not all zero).
// Returns nullopt when the polynomial has no sign change at all.
std::optional<Rational> root_bound(const Rational& a, const Rational& b, const Rational& c) {
  if (sgn(a) != 0) {
    Rational m = std::max(Rational(abs(b)), Rational(abs(c)));
    return Rational(1 + m / abs(a));
  }
  if (sgn(b) != 0) return Rational(abs(c / b));
  return std::nullopt;
}

// sup over n >= 0 of (2n^2 + 2n + 1) / |n s + w|^2 where s = z0 + z1 and w is
// the offset charge; the limit for n -> infinity is 2 / |s|^2.
Rational family_sup(const ExactComplex& s, const ExactComplex& w) {
  const Rational A = s.norm2();
  const Rational B = 2 * (s * w.conj()).re;
  const Rational C = w.norm2();
  const Rational limit = 2 / A;
  // f(n) - limit = (alpha n + beta) / (A D(n)) with D(n) = A n^2 + B n + C > 0,
  // and the derivative of (alpha n + beta) / D(n) has numerator
  // -alpha A n^2 - 2 beta A n + (alpha C - beta B). Past its largest root the
  // difference is monotone and tends to 0, so a finite scan settles the sup.
  const Rational alpha = 2 * A - 2 * B;
  const Rational beta = A - 2 * C;
  Rational best = limit;
  const auto bound = root_bound(-alpha * A, -2 * beta * A, alpha * C - beta * B);
  Integer n_last = 1;
  if (bound) {
    Rational b = *bound;
    n_last = b.get_num() / b.get_den() + 2;
  }
  for (Integer n = 0; n <= n_last; ++n) {
    const Rational nn(n);
    const Rational norm = 2 * nn * nn + 2 * nn + 1;
    const Rational denom = A * nn * nn + B * nn + C;
    if (sgn(denom) == 0) throw std::domain_error("charge vanishes on a class of Delta");
    best = std::max(best, Rational(norm / denom));
  }
  return best;
}

}  // namespace

Rational support_ratio_sup(const CentralCharge& Z) {
  if (!is_in_hreg(Z)) throw std::domain_error("support constant requires a charge in H^reg");
  const ExactComplex s = Z.z0 + Z.z1;
  // (n, n+1): n s + z1;  (n+1, n): n s + z0;  +-(1,1): 2 / |s|^2 (= the limit).
  return std::max(family_sup(s, Z.z1), family_sup(s, Z.z0));
}

Rational support_constant(const CentralCharge& Z) { return sqrt_upper_bound(support_ratio_sup(Z)); }

RationalMatrix2 RationalMatrix2::inverse() const {
  const Rational d = det();
  if (sgn(d) == 0) throw std::domain_error("singular 2x2 matrix");
  return RationalMatrix2{a11 / d, -a01 / d, -a10 / d, a00 / d};
}

RationalMatrix2 RationalMatrix2::operator*(const RationalMatrix2& o) const {
  return RationalMatrix2{a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
                         a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
}

ExactComplex RationalMatrix2::apply(const ExactComplex& z) const {
  return ExactComplex(a00 * z.re + a01 * z.im, a10 * z.re + a11 * z.im);
}

LiftedGL LiftedGL::scalar(const Rational& k) {
  LiftedGL g{{k, 0, 0, k}, 0};
  g.validate();
  return g;
}

void LiftedGL::validate() const {
  if (sgn(matrix.det()) <= 0) throw std::domain_error("GL+ element needs positive determinant");
}

CentralCharge act_lifted(const CentralCharge& Z, const LiftedGL& g) {
  g.validate();
  const RationalMatrix2 inv = g.matrix.inverse();
  return CentralCharge{inv.apply(Z.z0), inv.apply(Z.z1)};
}

LiftedGL t_action_lift(const CentralCharge& Z) {
  const ExactComplex& e0 = Z.z0;
  const ExactComplex& e1 = Z.z1;
  if (sgn(cross(e0, e1)) == 0) throw std::domain_error("z0 and z1 are linearly dependent over R");
  if (!(evaluate(Z, delta()) == ExactComplex::i_unit())) throw std::domain_error("charge is not normalized");
  if (!in_H(e0) || !in_H(e1) || phase_cmp(e0, e1) != std::strong_ordering::less) {
    throw std::domain_error("charge is not in the chamber U+");
  }
  // Frame E = [e0 e1]; in that frame g is [[2, -1], [1, 0]].
  const RationalMatrix2 frame{e0.re, e1.re, e0.im, e1.im};
  const RationalMatrix2 in_frame{2, -1, 1, 0};
  LiftedGL g{frame * in_frame * frame.inverse(), 0};
  g.validate();
  return g;
}

}  // namespace invstab
