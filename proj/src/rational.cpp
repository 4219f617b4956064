#include "invstab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace invstab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r{n, d};
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool rational_sqrt(const Rational& r, Rational* root) {
  if (sgn(r) < 0) return false;
  const Integer& n = r.get_num();
  const Integer& d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  if (root != nullptr) {
    Integer sn = sqrt(n);
    Integer sd = sqrt(d);
    *root = Rational(sn, sd);
    root->canonicalize();
  }
  return true;
}

Rational sqrt_upper_bound(const Rational& r, unsigned bits) {
  if (sgn(r) < 0) throw std::domain_error("sqrt of a negative rational");
  Rational exact;
  if (rational_sqrt(r, &exact)) return exact;
  // ceil(sqrt(r) * 2^bits) / 2^bits, computed on integers
  Integer scale = Integer(1) << bits;
  Integer scaled_num = r.get_num() * scale * scale;
  Integer q = scaled_num / r.get_den();
  if (q * r.get_den() != scaled_num) q += 1;
  Integer s = sqrt(q);
  if (s * s < q) s += 1;
  Rational out(s, scale);
  out.canonicalize();
  return out;
}

}  // namespace invstab
