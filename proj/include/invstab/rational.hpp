#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace invstab {

/// Exact rational number. Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a", "a/b". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, "a/b" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r{Integer{static_cast<long>(num)}, Integer{static_cast<long>(den)}};
  r.canonicalize();
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }

/// True iff r is the square of a rational; the root is written to *root.
bool rational_sqrt(const Rational& r, Rational* root);

/// Smallest rational of the form k / 2^bits that is >= sqrt(r), r >= 0.
Rational sqrt_upper_bound(const Rational& r, unsigned bits = 40);

}  // namespace invstab
