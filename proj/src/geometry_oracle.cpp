#include "invstab/geometry_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace invstab {

H1Dims h_p1(int n) { return H1Dims{std::max(n + 1, 0), std::max(-n - 1, 0)}; }

std::string DualObject::str() const {
  std::string out = "O(" + std::to_string(bundle.a) + "," + std::to_string(bundle.b) + ")";
  if (shift != 0) out += "[" + std::to_string(shift) + "]";
  return out;
}

int h_f0(const LineBundleF0& l, int k) {
  const H1Dims x = h_p1(l.a);
  const H1Dims y = h_p1(l.b);
  const int hx[2] = {x.h0, x.h1};
  const int hy[2] = {y.h0, y.h1};
  int total = 0;
  for (int s = 0; s <= 1; ++s) {
    const int t = k - s;
    if (t < 0 || t > 1) continue;
    total += hx[s] * hy[t];
  }
  return total;
}

int ext_f0(const DualObject& F, const DualObject& G, int k) {
  // Ext^k(F[s], G[t]) = Ext^{k+t-s}(F, G) = H^{k+t-s}(G (x) F^dual).
  const int degree = k + G.shift - F.shift;
  if (degree < 0 || degree > 2) return 0;
  return h_f0(LineBundleF0{G.bundle.a - F.bundle.a, G.bundle.b - F.bundle.b}, degree);
}

int ext_X_pushforward(const DualObject& F, const DualObject& G, int k) {
  return ext_f0(F, G, k) + ext_f0(G, F, 3 - k);
}

const std::array<LineBundleF0, 4>& exceptional_collection() {
  static const std::array<LineBundleF0, 4> e{{{0, 0}, {1, 0}, {1, 1}, {2, 1}}};
  return e;
}

const std::array<DualObject, 4>& dual_collection() {
  static const std::array<DualObject, 4> f{{DualObject({0, 0}, 0), DualObject({-1, 0}, 1),
                                            DualObject({1, -1}, 1), DualObject({0, -1}, 2)}};
  return f;
}

namespace {

void check_index(int i) {
  if (i < 0 || i > 3) throw std::out_of_range("collection index must be in 0..3");
}

}  // namespace

int pullback_cutoff(int i, int j) {
  check_index(i);
  check_index(j);
  const auto& e = exceptional_collection();
  const int u = e[j].a - e[i].a;
  const int v = e[j].b - e[i].b;
  int n = 0;
  while (u + 2 * n < -1 || v + 2 * n < -1) ++n;
  return n;
}

int ext_X_pullback(int i, int j, int k, int n_bound) {
  check_index(i);
  check_index(j);
  if (k < 0) return 0;
  const auto& e = exceptional_collection();
  const int last = k == 0 ? n_bound : pullback_cutoff(i, j);
  int total = 0;
  for (int n = 0; n <= last; ++n) {
    total += h_f0(LineBundleF0{e[j].a - e[i].a + 2 * n, e[j].b - e[i].b + 2 * n}, k);
  }
  return total;
}

QuiverMatrix derive_quiver() {
  const auto& f = dual_collection();
  QuiverMatrix n{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) n[i][j] = ext_X_pushforward(f[j], f[i], 1);
  }
  return n;
}

QuiverMatrix standard_quiver() {
  QuiverMatrix n{};
  for (int i = 0; i < 4; ++i) n[i][(i + 1) % 4] = 2;
  return n;
}

std::string Relation::str() const {
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const PathTerm& term = terms[t];
    if (t > 0) out += term.coefficient < 0 ? " - " : " + ";
    else if (term.coefficient < 0) out += "-";
    const int mag = std::abs(term.coefficient);
    if (mag != 1) out += std::to_string(mag) + "*";
    for (const Arrow& a : term.path) out += a.str();
  }
  return out;
}

std::vector<PathTerm> potential() {
  auto word = [](const char* letters) {
    ArrowPath p;
    for (int k = 0; k < 4; ++k) p.push_back(Arrow{letters[k], 4 - k});
    return p;
  };
  return {PathTerm{1, word("xxxx")}, PathTerm{1, word("yyyy")}, PathTerm{-1, word("yxyx")},
          PathTerm{-1, word("xyxy")}};
}

std::vector<PathTerm> cyclic_derivative(const std::vector<PathTerm>& w, const Arrow& a) {
  std::vector<PathTerm> out;
  for (const PathTerm& term : w) {
    const std::size_t len = term.path.size();
    for (std::size_t k = 0; k < len; ++k) {
      if (!(term.path[k] == a)) continue;
      // Rotate the cycle so that a is applied first, then drop it.
      ArrowPath rest;
      for (std::size_t m = k + 1; m < len; ++m) rest.push_back(term.path[m]);
      for (std::size_t m = 0; m < k; ++m) rest.push_back(term.path[m]);
      out.push_back(PathTerm{term.coefficient, rest});
    }
  }
  return out;
}

std::vector<Relation> potential_relations() {
  const std::vector<PathTerm> w = potential();
  std::vector<Relation> out;
  for (int j = 1; j <= 4; ++j) {
    for (char letter : {'x', 'y'}) {
      const Arrow a{letter, j};
      out.push_back(Relation{a, cyclic_derivative(w, a)});
    }
  }
  return out;
}

bool path_composable(const ArrowPath& path, int* source, int* target) {
  if (path.empty()) return false;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (path[k].source() != path[k + 1].target()) return false;
  }
  if (source != nullptr) *source = path.back().source();
  if (target != nullptr) *target = path.front().target();
  return true;
}

}  // namespace invstab
