#pragma once

// Hearts of the derived category, recorded through their four simple objects
// (K-class plus a symbolic name) and what is known of their Ext^1 quiver.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "invstab/charge.hpp"
#include "invstab/geometry_oracle.hpp"
#include "invstab/k_lattice.hpp"

namespace invstab {

/// Symbolic object name. Grammar:
///   s*O(a,b)[k]   s*O_fiber(x)[k]   s*O_fiber(x)(-1)[k]   Psi^m(...)
/// with [0] omitted and Psi^1 written Psi. Anything built by the tilt or
/// twist fallbacks (cone(...), T(...), ...) is kept verbatim as symbolic.
struct Label {
  enum class Kind { line, fiber, fiber_twisted, symbolic };
  Kind kind = Kind::line;
  int a = 0;
  int b = 0;
  int shift = 0;
  int psi = 0;
  std::string text;  // symbolic only

  static Label line(int a, int b, int shift = 0, int psi = 0) { return Label{Kind::line, a, b, shift, psi, {}}; }
  static Label fiber(bool twisted, int shift = 0, int psi = 0) {
    return Label{twisted ? Kind::fiber_twisted : Kind::fiber, 0, 0, shift, psi, {}};
  }
  static Label symbolic(std::string t) { return Label{Kind::symbolic, 0, 0, 0, 0, std::move(t)}; }

  std::string str() const;
  Label shifted(int k) const;
  Label with_psi(int m) const;
  bool operator==(const Label& o) const { return str() == o.str(); }
};

/// Throws std::invalid_argument when the text matches neither the grammar
/// nor a recognised symbolic wrapper.
Label parse_label(const std::string& text);

/// Name attached to a class by the Kronecker-type correspondence (type I for
/// classes supported on {0,1} or {2,3}, type II = Psi of type I for {1,2} or
/// {3,0}); nullopt when the class is not in the table.
std::optional<Label> kron_type_label(const KClass& v);

struct SimpleObject {
  KClass kclass;
  Label label;
};

/// ext[a][b] = dim Ext^1(S_b, S_a); entries not determined by the
/// construction are nullopt.
using ExtMatrix = std::array<std::array<std::optional<int>, 4>, 4>;

ExtMatrix known_ext(const QuiverMatrix& q);
bool ext_fully_known(const ExtMatrix& e);

struct Heart {
  std::array<SimpleObject, 4> simples;
  ExtMatrix ext{};

  /// Determinant of the class matrix; +-1 for a genuine heart.
  std::int64_t class_determinant() const;
};

Heart standard_heart();

enum class TiltDirection { left, right };
TiltDirection parse_direction(const std::string& text);

/// Simple tilt at slot i. Left: S_i -> S_i[1], X -> X + ext[i][X] S_i.
/// Right: S_i -> S_i[-1], X -> X + ext[X][i] S_i. The new matrix keeps only
/// the entries forced by the universal extensions (those through slot i).
/// Throws std::domain_error if the needed entries are unknown or S_i has
/// self-extensions.
Heart simple_tilt(const Heart& h, int i, TiltDirection dir);

/// Tilt at the two non-adjacent slots {i, i+2} together. The result is the
/// image of h under an autoequivalence, so its Ext matrix is the slot
/// permutation of the original one. Throws std::domain_error if the pair has
/// extensions or the matrix is not of cyclic shape.
Heart double_tilt(const Heart& h, int i, TiltDirection dir);

enum class Generator { T, T_inv, T_psi, T_psi_inv };

std::string generator_name(Generator g);
Generator inverse(Generator g);
LatticeAuto generator_matrix(Generator g);

/// A reduced word g1 g2 ... gn, read as the composite g1 o g2 o ... o gn.
struct TiltWord {
  std::vector<Generator> letters;

  /// Cancels adjacent inverse pairs.
  static TiltWord reduced(std::vector<Generator> letters);
  /// Comma-separated generators: T, T^-1, Tpsi, Tpsi^-1 (also T_Psi, Tinv, Tpsiinv).
  static TiltWord parse(const std::string& text);

  TiltWord append(Generator g) const;
  TiltWord inverse() const;
  bool empty() const { return letters.empty(); }
  LatticeAuto matrix() const;
  /// (#T - #T^-1) - (#T_Psi - #T_Psi^-1).
  int quotient_exponent() const;
  std::string str() const;  // "[T,T_Psi^-1]"
  bool operator==(const TiltWord&) const = default;
};

/// Label of g(X) for an autoequivalence generator.
Label apply_generator(Generator g, const Label& x);

/// Heart g1 ... gn (A) with slot i holding the image of S_i.
Heart heart_of_word(const TiltWord& w);

bool heart_equal_kclasses(const Heart& h1, const Heart& h2);

struct AlgebraicStability {
  Heart heart;
  CentralCharge charge;  // values on slots 0 and 1
  std::string region;    // "U+", "U-" or "ray"
};

/// Validates a charge given by its values on the four simples of h. Throws
/// std::domain_error if a value is zero or outside H, or if value(0) !=
/// value(2) or value(1) != value(3).
AlgebraicStability algebraic_stability(const Heart& h, const std::array<ExactComplex, 4>& values);

}  // namespace invstab
