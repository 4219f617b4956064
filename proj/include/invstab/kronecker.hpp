#pragma once

// Representations of the Kronecker quiver with two arrows 0 => 1 as matrix
// pairs A, B : V1 -> V0 (right-module orientation), over Q or a prime field.

#include <optional>
#include <string>
#include <vector>

#include "invstab/charge.hpp"
#include "invstab/k_lattice.hpp"
#include "invstab/linalg.hpp"
#include "invstab/polynomial.hpp"

namespace invstab {

struct FieldTag {
  std::int64_t prime = 0;  // 0 means Q

  static FieldTag rationals() { return FieldTag{0}; }
  static FieldTag fp(std::int64_t p);
  bool is_rational() const { return prime == 0; }
  bool operator==(const FieldTag&) const = default;
  std::string str() const;  // "Q" or "F5"
  static FieldTag parse(const std::string& text);
};

using QMatrix = Matrix<RationalField>;
using FpMatrix = Matrix<PrimeField>;

/// Entries are always stored as rationals; over F_p they are the canonical
/// residues 0..p-1.
struct KroneckerRep {
  FieldTag field;
  std::size_t p = 0;  // dim V0
  std::size_t q = 0;  // dim V1
  QMatrix A;
  QMatrix B;

  /// Throws std::invalid_argument on shape mismatch or non-reduced F_p entries.
  void validate() const;
  bool is_zero() const { return p == 0 && q == 0; }
  bool operator==(const KroneckerRep&) const = default;
};

KroneckerRep make_rep(FieldTag field, std::size_t p, std::size_t q, QMatrix A, QMatrix B);

/// A point [a:b] of P1 with rational coordinates, stored as [l:1] or [1:0].
struct P1Point {
  Rational value;  // l when finite
  bool infinite = false;

  static P1Point finite(const Rational& l) { return P1Point{l, false}; }
  static P1Point infinity() { return P1Point{0, true}; }
  /// Throws std::invalid_argument for [0:0].
  static P1Point from_pair(const Rational& a, const Rational& b);
  bool operator==(const P1Point&) const = default;
  std::string str() const;  // "[l:1]" or "[1:0]"
};

/// The indecomposable of class (p, q): a real root without lambda, or
/// p = q = m >= 1 with lambda. Throws std::invalid_argument otherwise, and
/// std::domain_error when lambda has no reduction to the requested F_p.
KroneckerRep indecomposable(std::size_t p, std::size_t q, std::optional<P1Point> lambda = std::nullopt,
                            FieldTag field = FieldTag::rationals());
/// A = I, B = companion matrix of the monic polynomial with the given
/// coefficients (constant term first, leading 1 omitted). The pencil has the
/// single elementary divisor given by that polynomial.
KroneckerRep companion_block(const std::vector<Rational>& lower_coeffs, FieldTag field = FieldTag::rationals());
KroneckerRep simple_c0(FieldTag field = FieldTag::rationals());
KroneckerRep simple_c1(FieldTag field = FieldTag::rationals());

KroneckerRep direct_sum(const KroneckerRep& M, const KroneckerRep& N);
/// (P A Q^-1, P B Q^-1) for invertible P (p x p) and Q (q x q) over the
/// field of M. Throws std::domain_error when P or Q is singular.
KroneckerRep change_basis(const KroneckerRep& M, const QMatrix& P, const QMatrix& Q);
/// Reduction of a rational representation modulo a prime. Throws
/// std::domain_error when a denominator vanishes mod p.
KroneckerRep reduce_mod_p(const KroneckerRep& M, std::int64_t prime);

/// dim Hom(M, N). Throws std::invalid_argument when the fields differ.
std::size_t dim_hom(const KroneckerRep& M, const KroneckerRep& N);

/// Z(C0), Z(C1), both in H.
struct StabilityFunctionK2 {
  ExactComplex zC0;
  ExactComplex zC1;

  /// Throws std::domain_error if a value is zero or outside H.
  void validate() const;
  ExactComplex operator()(std::int64_t a, std::int64_t b) const;
};

struct BruteforceBudget {
  std::size_t max_q = 4;
  std::int64_t max_field = 7;
};

struct SemistabilityVerdict {
  bool semistable = false;
  bool stable = false;
  /// Proper subrepresentation class of largest phase, when M is not stable.
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;
};

/// Decides (semi)stability over F_p by enumerating every subspace U1 of V1 and
/// closing it minimally in V0. Throws std::domain_error over Q or on zero M,
/// and std::length_error when the enumeration budget is exceeded.
SemistabilityVerdict semistable_bruteforce(const KroneckerRep& M, const StabilityFunctionK2& Z,
                                           const BruteforceBudget& budget = {});

struct PencilBlock {
  enum class Kind { sub_root, quotient_root, regular };
  Kind kind = Kind::sub_root;
  std::size_t n = 0;          // roots: class (n, n+1) or (n+1, n)
  Polynomial minpoly;         // regular, finite: monic irreducible over Q
  bool at_infinity = false;   // regular at [1:0]
  std::size_t multiplicity = 0;  // regular: size of the elementary divisor

  std::pair<std::size_t, std::size_t> dims() const;
  std::string str() const;
  bool operator==(const PencilBlock& o) const;
  bool operator<(const PencilBlock& o) const;
};

/// Kronecker canonical form of a rational pencil, as a sorted block list.
std::vector<PencilBlock> kronecker_canonical_form(const KroneckerRep& M);

/// An explicit rational representative of a single block. Regular blocks with
/// non-integral minimal polynomial use an integer companion pencil.
KroneckerRep block_representative(const PencilBlock& b);

struct HNFactor {
  std::pair<std::int64_t, std::int64_t> cls;
  ExactComplex charge;
  std::string descriptor;
  KroneckerRep rep;  // a representative of the factor, over Q
};

/// Harder-Narasimhan factors with strictly decreasing phases. Throws
/// std::domain_error for the zero representation or a non-rational field.
std::vector<HNFactor> hn_filtration(const KroneckerRep& M, const StabilityFunctionK2& Z);

enum class Embedding { I1, I2, II1, II2 };
/// Throws std::invalid_argument for an unknown name.
Embedding parse_embedding(const std::string& name);
KClass embed_class(std::int64_t p, std::int64_t q, Embedding which);

}  // namespace invstab
