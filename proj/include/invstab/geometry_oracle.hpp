#pragma once

// Line-bundle cohomology on P1 and P1 x P1, pushed into the local surface X
// through the zero section s and the projection pi. Used to re-derive the
// quiver of the standard heart and the vanishing that makes the pulled-back
// collection tilting.

#include <array>
#include <string>
#include <vector>

namespace invstab {

struct H1Dims {
  int h0 = 0;
  int h1 = 0;
  bool operator==(const H1Dims&) const = default;
};

/// Cohomology dimensions of O(n) on P1.
H1Dims h_p1(int n);

/// The line bundle O(a,b) on F0 = P1 x P1.
struct LineBundleF0 {
  int a = 0;
  int b = 0;
  bool operator==(const LineBundleF0&) const = default;
};

/// A shifted line bundle O(a,b)[shift].
struct DualObject {
  LineBundleF0 bundle;
  int shift = 0;

  DualObject() = default;
  DualObject(LineBundleF0 l, int s = 0) : bundle(l), shift(s) {}
  std::string str() const;
};

/// H^k(F0, O(a,b)) by Kunneth.
int h_f0(const LineBundleF0& l, int k);

/// dim Ext^k_{F0}(F, G); zero outside 0 <= k + shift difference <= 2.
int ext_f0(const DualObject& F, const DualObject& G, int k);

/// dim Ext^k_X(s_* F, s_* G) = Ext^k_{F0}(F, G) + Ext^{3-k}_{F0}(G, F).
int ext_X_pushforward(const DualObject& F, const DualObject& G, int k);

/// The exceptional collection E = (O, O(1,0), O(1,1), O(2,1)).
const std::array<LineBundleF0, 4>& exceptional_collection();
/// Its dual F = (O, O(-1,0)[1], O(1,-1)[1], O(0,-1)[2]).
const std::array<DualObject, 4>& dual_collection();

/// Smallest n >= 0 with both c-a+2n >= -1 and d-b+2n >= -1 for the pair
/// (E_i, E_j); past it no higher cohomology survives.
int pullback_cutoff(int i, int j);

/// dim Ext^k_X(pi^* E_i, pi^* E_j) as the sum over n of
/// Ext^k_{F0}(E_i, E_j (x) O(2n, 2n)). For k >= 1 the sum stops at the cutoff;
/// for k = 0 it runs over 0 <= n <= n_bound.
int ext_X_pullback(int i, int j, int k, int n_bound = 0);

using QuiverMatrix = std::array<std::array<int, 4>, 4>;

/// n[i][j] = dim Ext^1_X(S_j, S_i) = number of arrows i -> j, with S_i = s_* F_i.
QuiverMatrix derive_quiver();
/// Two arrows on each edge 0->1, 1->2, 2->3, 3->0.
QuiverMatrix standard_quiver();

/// Arrows x_j, y_j (j = 1..4) run from vertex j-1 to vertex j mod 4.
struct Arrow {
  char letter = 'x';
  int index = 1;
  int source() const { return (index + 3) % 4; }
  int target() const { return index % 4; }
  std::string str() const { return std::string(1, letter) + std::to_string(index); }
  bool operator==(const Arrow&) const = default;
};

/// A path written as composition, leftmost arrow applied last.
using ArrowPath = std::vector<Arrow>;

struct PathTerm {
  int coefficient = 1;
  ArrowPath path;
};

struct Relation {
  Arrow wrt;  // the arrow differentiated
  std::vector<PathTerm> terms;
  std::string str() const;
};

/// The superpotential x4x3x2x1 + y4y3y2y1 - y4x3y2x1 - x4y3x2y1.
std::vector<PathTerm> potential();

/// Cyclic derivative of a sum of cycles with respect to one arrow.
std::vector<PathTerm> cyclic_derivative(const std::vector<PathTerm>& w, const Arrow& a);

/// The eight relations d_{x_j} W, d_{y_j} W, ordered x1, y1, x2, y2, ...
std::vector<Relation> potential_relations();

/// True iff consecutive arrows compose; sets source and target of the path.
bool path_composable(const ArrowPath& path, int* source = nullptr, int* target = nullptr);

}  // namespace invstab
