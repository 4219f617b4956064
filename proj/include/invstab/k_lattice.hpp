#pragma once

// Grothendieck lattice K0 = Z^4 of the standard heart, its rank-2 quotient by
// the anti-invariant part, and the integer automorphisms induced by the
// autoequivalences Psi, Phi = Psi^2, T = (- (x) O(1,0)) and T_Psi = Psi T Psi^-1.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace invstab {

/// Class in K0, coordinates over the simple classes gamma_0..gamma_3.
struct KClass {
  std::array<std::int64_t, 4> coords{};

  KClass operator+(const KClass& o) const;
  KClass operator-(const KClass& o) const;
  KClass operator-() const;
  friend KClass operator*(std::int64_t k, const KClass& v);
  bool operator==(const KClass&) const = default;
  auto operator<=>(const KClass&) const = default;

  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  bool is_zero() const;
  /// All coordinates >= 0.
  bool is_nonnegative() const;
  std::string str() const;  // "[a,b,c,d]"
};

/// Class in the quotient K0bar = K0 / <gamma_0 - gamma_2, gamma_1 - gamma_3>.
struct QuotClass {
  std::array<std::int64_t, 2> coords{};

  QuotClass operator+(const QuotClass& o) const;
  QuotClass operator-() const;
  bool operator==(const QuotClass&) const = default;
  auto operator<=>(const QuotClass&) const = default;
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::string str() const;  // "[p,q]"
};

using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;
using IntMatrix4 = std::array<std::array<std::int64_t, 4>, 4>;

/// Lattice automorphism; column i is the image of gamma_i.
struct LatticeAuto {
  IntMatrix4 matrix{};
  std::string name;

  LatticeAuto operator*(const LatticeAuto& rhs) const;  // composition, rhs applied first
  bool operator==(const LatticeAuto& o) const { return matrix == o.matrix; }
  std::int64_t det() const;
  /// Inverse over Z; throws std::domain_error unless det = +-1.
  LatticeAuto inverse() const;
};

KClass gamma(int i);
KClass delta();

LatticeAuto identity_auto();
LatticeAuto psi();
LatticeAuto phi();
LatticeAuto t();
LatticeAuto t_psi();

KClass apply(const LatticeAuto& a, const KClass& v);
QuotClass project(const KClass& v);

/// True iff a maps gamma_0 - gamma_2 and gamma_1 - gamma_3 into that subgroup.
bool preserves_kernel(const LatticeAuto& a);
/// Induced action on K0bar w.r.t. (gbar_0, gbar_1). Throws std::domain_error
/// when the kernel is not preserved.
IntMatrix2 quotient_action(const LatticeAuto& a);

IntMatrix2 mul(const IntMatrix2& a, const IntMatrix2& b);
QuotClass apply(const IntMatrix2& m, const QuotClass& v);
IntMatrix2 identity2();

/// {(n, n+1), (n+1, n) : 0 <= n <= n_max} followed by (1,1) and (-1,-1).
std::vector<QuotClass> delta_set(int n_max);
/// Membership in the full (infinite) set of quotient classes of stable objects,
/// up to sign: +-(n, n+1), +-(n+1, n) for n >= 0, and +-(1,1).
bool in_delta_up_to_sign(const QuotClass& v);

/// chi(alpha, alpha) for the Kronecker quiver with two arrows 0 -> 1.
std::int64_t tits_form_k2(std::int64_t p, std::int64_t q);

}  // namespace invstab
