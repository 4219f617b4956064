#include "invstab/hearts.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace invstab {

std::string Label::str() const {
  if (kind == Kind::symbolic) return text;
  std::string inner;
  switch (kind) {
    case Kind::line:
      inner = "s*O(" + std::to_string(a) + "," + std::to_string(b) + ")";
      break;
    case Kind::fiber:
      inner = "s*O_fiber(x)";
      break;
    case Kind::fiber_twisted:
      inner = "s*O_fiber(x)(-1)";
      break;
    case Kind::symbolic:
      break;
  }
  if (shift != 0) inner += "[" + std::to_string(shift) + "]";
  if (psi == 0) return inner;
  if (psi == 1) return "Psi(" + inner + ")";
  return "Psi^" + std::to_string(psi) + "(" + inner + ")";
}

Label Label::shifted(int k) const {
  if (k == 0) return *this;
  if (kind == Kind::symbolic) return symbolic("(" + text + ")[" + std::to_string(k) + "]");
  Label out = *this;
  out.shift += k;
  return out;
}

Label Label::with_psi(int m) const {
  if (kind == Kind::symbolic) {
    if (m == 0) return *this;
    return symbolic((m == 1 ? std::string("Psi(") : "Psi^" + std::to_string(m) + "(") + text + ")");
  }
  Label out = *this;
  out.psi += m;
  return out;
}

Label parse_label(const std::string& text) {
  static const std::regex grammar(
      R"(^(?:Psi(?:\^(-?\d+))?\()?s\*O(?:\((-?\d+),(-?\d+)\)|_fiber\(x\)(\(-1\))?)(?:\[(-?\d+)\])?(\)?)$)");
  std::smatch m;
  if (std::regex_match(text, m, grammar)) {
    const bool wrapped = text.rfind("Psi", 0) == 0;
    if (wrapped != (m[6].length() == 1)) throw std::invalid_argument("unbalanced label '" + text + "'");
    Label out;
    if (m[2].matched) {
      out = Label::line(std::stoi(m[2]), std::stoi(m[3]));
    } else {
      out = Label::fiber(m[4].matched);
    }
    if (m[5].matched) out.shift = std::stoi(m[5]);
    if (wrapped) out.psi = m[1].matched ? std::stoi(m[1]) : 1;
    return out;
  }
  for (const char* prefix : {"cone(", "T(", "T^-1(", "T_Psi(", "T_Psi^-1(", "Psi(", "Psi^", "("}) {
    if (text.rfind(prefix, 0) == 0) return Label::symbolic(text);
  }
  throw std::invalid_argument("unrecognised object label '" + text + "'");
}

namespace {

std::optional<Label> type_one_label(std::int64_t x, std::int64_t y, bool second_pair) {
  if (x < 0 || y < 0) return std::nullopt;
  if (x == 1 && y == 1) return second_pair ? Label::fiber(true, 1) : Label::fiber(false);
  const int l = static_cast<int>(std::min(x, y));
  if (x == y + 1) return second_pair ? Label::line(l + 1, -1, 1) : Label::line(l, 0);
  if (y == x + 1) return second_pair ? Label::line(-l, -1, 2) : Label::line(-l - 1, 0, 1);
  return std::nullopt;
}

}  // namespace

std::optional<Label> kron_type_label(const KClass& v) {
  if (v[2] == 0 && v[3] == 0) return type_one_label(v[0], v[1], false);
  if (v[0] == 0 && v[1] == 0) return type_one_label(v[2], v[3], true);
  // Type II: Psi applied to the type I class psi^-1(v).
  const KClass back{{v[1], v[2], v[3], v[0]}};
  std::optional<Label> inner;
  if (back[2] == 0 && back[3] == 0) inner = type_one_label(back[0], back[1], false);
  else if (back[0] == 0 && back[1] == 0) inner = type_one_label(back[2], back[3], true);
  if (!inner) return std::nullopt;
  return inner->with_psi(1);
}

ExtMatrix known_ext(const QuiverMatrix& q) {
  ExtMatrix e{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) e[a][b] = q[a][b];
  }
  return e;
}

bool ext_fully_known(const ExtMatrix& e) {
  for (const auto& row : e) {
    for (const auto& x : row) {
      if (!x) return false;
    }
  }
  return true;
}

std::int64_t Heart::class_determinant() const {
  LatticeAuto m;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i < 4; ++i) m.matrix[i][j] = simples[j].kclass[i];
  }
  return m.det();
}

namespace {

const std::array<Label, 4>& standard_labels() {
  static const std::array<Label, 4> labels{Label::line(0, 0), Label::line(-1, 0, 1), Label::line(1, -1, 1),
                                           Label::line(0, -1, 2)};
  return labels;
}

bool is_standard_simple(const SimpleObject& s) {
  for (int j = 0; j < 4; ++j) {
    if (s.kclass == gamma(j) && s.label == standard_labels()[j]) return true;
  }
  return false;
}

void check_slot(int i) {
  if (i < 0 || i > 3) throw std::out_of_range("heart slot must be in 0..3");
}

int need(const ExtMatrix& e, int a, int b) {
  if (!e[a][b]) throw std::domain_error("Ext^1 entry (" + std::to_string(a) + "," + std::to_string(b) + ") is unknown");
  return *e[a][b];
}

// Name of X + sum e_k S_k after tilting at the slots k listed in `terms`.
Label tilted_label(const SimpleObject& x, const KClass& cls, const std::vector<std::pair<const SimpleObject*, int>>& terms,
                   TiltDirection dir) {
  bool standard = is_standard_simple(x);
  for (const auto& [s, e] : terms) standard = standard && is_standard_simple(*s);
  if (standard) {
    if (auto l = kron_type_label(cls)) return *l;
  }
  std::string sum;
  for (const auto& [s, e] : terms) {
    if (!sum.empty()) sum += " + ";
    sum += s->label.shifted(dir == TiltDirection::left ? 1 : -1).str();
    if (e != 1) sum += "^" + std::to_string(e);
  }
  if (dir == TiltDirection::left) return Label::symbolic("cone(" + x.label.str() + " -> " + sum + ")[-1]");
  return Label::symbolic("cone(" + sum + " -> " + x.label.str() + ")");
}

}  // namespace

Heart standard_heart() {
  Heart h;
  for (int i = 0; i < 4; ++i) h.simples[i] = SimpleObject{gamma(i), standard_labels()[i]};
  h.ext = known_ext(derive_quiver());
  return h;
}

TiltDirection parse_direction(const std::string& text) {
  if (text == "left" || text == "L") return TiltDirection::left;
  if (text == "right" || text == "R") return TiltDirection::right;
  throw std::invalid_argument("tilt direction must be left or right, got '" + text + "'");
}

Heart simple_tilt(const Heart& h, int i, TiltDirection dir) {
  check_slot(i);
  if (need(h.ext, i, i) != 0) throw std::domain_error("cannot tilt at a simple with self-extensions");
  const bool left = dir == TiltDirection::left;
  const SimpleObject& s = h.simples[i];
  Heart out;
  for (int j = 0; j < 4; ++j) {
    if (j == i) {
      out.simples[j] = SimpleObject{-s.kclass, s.label.shifted(left ? 1 : -1)};
      continue;
    }
    const int e = left ? need(h.ext, i, j) : need(h.ext, j, i);
    const SimpleObject& x = h.simples[j];
    if (e == 0) {
      out.simples[j] = x;
      continue;
    }
    const KClass cls = x.kclass + e * s.kclass;
    out.simples[j] = SimpleObject{cls, tilted_label(x, cls, {{&s, e}}, dir)};
  }
  // Hom from S_i into the left universal extension (resp. out of the right
  // one) is C^e, which fixes the Ext^1 entries through the new simple at i.
  out.ext[i][i] = 0;
  for (int j = 0; j < 4; ++j) {
    if (j == i) continue;
    if (left) out.ext[j][i] = *h.ext[i][j];
    else out.ext[i][j] = *h.ext[j][i];
  }
  return out;
}

Heart double_tilt(const Heart& h, int i, TiltDirection dir) {
  check_slot(i);
  if (!ext_fully_known(h.ext)) throw std::domain_error("double tilt needs a fully known Ext matrix");
  const int k1 = i % 2;
  const int k2 = k1 + 2;
  if (*h.ext[k1][k2] != 0 || *h.ext[k2][k1] != 0) {
    throw std::domain_error("paired simples have extensions between them");
  }
  const bool left = dir == TiltDirection::left;
  for (int k : {k1, k2}) {
    if (*h.ext[k][k] != 0) throw std::domain_error("cannot tilt at a simple with self-extensions");
  }

  // sigma pairs each tilted slot with its unique out- (left) or in- (right) neighbour.
  std::array<int, 4> sigma{-1, -1, -1, -1};
  for (int k : {k1, k2}) {
    int nb = -1;
    for (int j = 0; j < 4; ++j) {
      const int e = left ? *h.ext[k][j] : *h.ext[j][k];
      if (e == 0) continue;
      if (nb != -1) throw std::domain_error("double tilt needs the cyclic quiver shape");
      nb = j;
    }
    if (nb == -1 || sigma[nb] != -1) throw std::domain_error("double tilt needs the cyclic quiver shape");
    sigma[k] = nb;
    sigma[nb] = k;
  }

  Heart out;
  for (int j = 0; j < 4; ++j) {
    const SimpleObject& x = h.simples[j];
    if (j == k1 || j == k2) {
      out.simples[j] = SimpleObject{-x.kclass, x.label.shifted(left ? 1 : -1)};
      continue;
    }
    KClass cls = x.kclass;
    std::vector<std::pair<const SimpleObject*, int>> terms;
    for (int k : {k1, k2}) {
      const int e = left ? *h.ext[k][j] : *h.ext[j][k];
      if (e == 0) continue;
      cls = cls + e * h.simples[k].kclass;
      terms.emplace_back(&h.simples[k], e);
    }
    out.simples[j] = terms.empty() ? x : SimpleObject{cls, tilted_label(x, cls, terms, dir)};
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) out.ext[a][b] = h.ext[sigma[a]][sigma[b]];
  }
  return out;
}

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::T:
      return "T";
    case Generator::T_inv:
      return "T^-1";
    case Generator::T_psi:
      return "T_Psi";
    case Generator::T_psi_inv:
      return "T_Psi^-1";
  }
  return "";
}

Generator inverse(Generator g) {
  switch (g) {
    case Generator::T:
      return Generator::T_inv;
    case Generator::T_inv:
      return Generator::T;
    case Generator::T_psi:
      return Generator::T_psi_inv;
    case Generator::T_psi_inv:
      return Generator::T_psi;
  }
  return g;
}

LatticeAuto generator_matrix(Generator g) {
  switch (g) {
    case Generator::T:
      return t();
    case Generator::T_inv:
      return t().inverse();
    case Generator::T_psi:
      return t_psi();
    case Generator::T_psi_inv:
      return t_psi().inverse();
  }
  return identity_auto();
}

TiltWord TiltWord::reduced(std::vector<Generator> letters) {
  TiltWord w;
  for (Generator g : letters) w = w.append(g);
  return w;
}

TiltWord TiltWord::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '[' && c != ']') s.push_back(c);
  }
  std::vector<Generator> letters;
  std::size_t start = 0;
  while (start < s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok == "T") letters.push_back(Generator::T);
    else if (tok == "T^-1" || tok == "Tinv") letters.push_back(Generator::T_inv);
    else if (tok == "Tpsi" || tok == "T_Psi" || tok == "T_psi") letters.push_back(Generator::T_psi);
    else if (tok == "Tpsi^-1" || tok == "T_Psi^-1" || tok == "T_psi^-1" || tok == "Tpsiinv") {
      letters.push_back(Generator::T_psi_inv);
    } else {
      throw std::invalid_argument("unknown generator '" + tok + "' (use T, T^-1, Tpsi, Tpsi^-1)");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return reduced(letters);
}

TiltWord TiltWord::append(Generator g) const {
  TiltWord w = *this;
  if (!w.letters.empty() && w.letters.back() == invstab::inverse(g)) w.letters.pop_back();
  else w.letters.push_back(g);
  return w;
}

TiltWord TiltWord::inverse() const {
  TiltWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(invstab::inverse(*it));
  return w;
}

LatticeAuto TiltWord::matrix() const {
  LatticeAuto m = identity_auto();
  for (Generator g : letters) m = m * generator_matrix(g);
  m.name = str();
  return m;
}

int TiltWord::quotient_exponent() const {
  int n = 0;
  for (Generator g : letters) {
    switch (g) {
      case Generator::T:
        ++n;
        break;
      case Generator::T_inv:
        --n;
        break;
      case Generator::T_psi:
        --n;
        break;
      case Generator::T_psi_inv:
        ++n;
        break;
    }
  }
  return n;
}

std::string TiltWord::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k > 0) out += ",";
    out += generator_name(letters[k]);
  }
  return out + "]";
}

namespace {

Label twist(const Label& x, int step) {
  if (x.kind == Label::Kind::line && x.psi == 0) {
    Label out = x;
    out.a += step;
    return out;
  }
  if ((x.kind == Label::Kind::fiber || x.kind == Label::Kind::fiber_twisted) && x.psi == 0) return x;
  return Label::symbolic((step > 0 ? "T(" : "T^-1(") + x.str() + ")");
}

// Psi T^step Psi^-1.
Label conjugated_twist(const Label& x, int step) {
  const std::string wrap = step > 0 ? "T_Psi(" : "T_Psi^-1(";
  if (x.kind == Label::Kind::symbolic) return Label::symbolic(wrap + x.str() + ")");
  if (x.psi == 1) {
    Label inner = x;
    inner.psi = 0;
    const Label moved = twist(inner, step);
    if (moved.kind != Label::Kind::symbolic) return moved.with_psi(1);
  }
  if (x.psi == 0) {
    for (int j = 0; j < 4; ++j) {
      if (x == standard_labels()[j]) {
        const Label moved = twist(standard_labels()[(j + 3) % 4], step);
        if (moved.kind != Label::Kind::symbolic) return moved.with_psi(1);
      }
    }
  }
  return Label::symbolic(wrap + x.str() + ")");
}

}  // namespace

Label apply_generator(Generator g, const Label& x) {
  switch (g) {
    case Generator::T:
      return twist(x, 1);
    case Generator::T_inv:
      return twist(x, -1);
    case Generator::T_psi:
      return conjugated_twist(x, 1);
    case Generator::T_psi_inv:
      return conjugated_twist(x, -1);
  }
  return x;
}

Heart heart_of_word(const TiltWord& w) {
  Heart h = standard_heart();
  const LatticeAuto m = w.matrix();
  for (int i = 0; i < 4; ++i) {
    SimpleObject& s = h.simples[i];
    s.kclass = apply(m, s.kclass);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) s.label = apply_generator(*it, s.label);
  }
  return h;
}

bool heart_equal_kclasses(const Heart& h1, const Heart& h2) {
  std::array<KClass, 4> a, b;
  for (int i = 0; i < 4; ++i) {
    a[i] = h1.simples[i].kclass;
    b[i] = h2.simples[i].kclass;
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

AlgebraicStability algebraic_stability(const Heart& h, const std::array<ExactComplex, 4>& values) {
  for (const ExactComplex& z : values) {
    if (z.is_zero() || !in_H(z)) throw std::domain_error("every simple must be sent to a nonzero point of H");
  }
  if (!(values[0] == values[2]) || !(values[1] == values[3])) {
    throw std::domain_error("charge is not Phi-invariant: need value(0) = value(2) and value(1) = value(3)");
  }
  const auto cmp = phase_cmp(values[0], values[1]);
  const std::string region = cmp == std::strong_ordering::less ? "U+" : cmp == std::strong_ordering::greater ? "U-" : "ray";
  return AlgebraicStability{h, CentralCharge{values[0], values[1]}, region};
}

}  // namespace invstab
