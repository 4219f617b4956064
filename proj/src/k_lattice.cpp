#include "invstab/k_lattice.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace invstab {

KClass KClass::operator+(const KClass& o) const {
  KClass r;
  for (std::size_t i = 0; i < 4; ++i) r.coords[i] = coords[i] + o.coords[i];
  return r;
}

KClass KClass::operator-(const KClass& o) const { return *this + (-o); }

KClass KClass::operator-() const {
  KClass r;
  for (std::size_t i = 0; i < 4; ++i) r.coords[i] = -coords[i];
  return r;
}

KClass operator*(std::int64_t k, const KClass& v) {
  KClass r;
  for (std::size_t i = 0; i < 4; ++i) r.coords[i] = k * v.coords[i];
  return r;
}

bool KClass::is_zero() const { return coords == std::array<std::int64_t, 4>{}; }

bool KClass::is_nonnegative() const {
  for (auto c : coords) {
    if (c < 0) return false;
  }
  return true;
}

std::string KClass::str() const {
  std::ostringstream os;
  os << '[' << coords[0] << ',' << coords[1] << ',' << coords[2] << ',' << coords[3] << ']';
  return os.str();
}

QuotClass QuotClass::operator+(const QuotClass& o) const {
  return QuotClass{{coords[0] + o.coords[0], coords[1] + o.coords[1]}};
}

QuotClass QuotClass::operator-() const { return QuotClass{{-coords[0], -coords[1]}}; }

std::string QuotClass::str() const {
  std::ostringstream os;
  os << '[' << coords[0] << ',' << coords[1] << ']';
  return os.str();
}

LatticeAuto LatticeAuto::operator*(const LatticeAuto& rhs) const {
  LatticeAuto r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < 4; ++k) s += matrix[i][k] * rhs.matrix[k][j];
      r.matrix[i][j] = s;
    }
  }
  r.name = name + "*" + rhs.name;
  return r;
}

namespace {

std::int64_t det3(const IntMatrix4& m, std::size_t skip_row, std::size_t skip_col) {
  std::array<std::array<std::int64_t, 3>, 3> s{};
  std::size_t r = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == skip_row) continue;
    std::size_t c = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j == skip_col) continue;
      s[r][c++] = m[i][j];
    }
    ++r;
  }
  return s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1]) -
         s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0]) +
         s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0]);
}

LatticeAuto from_columns(const std::array<KClass, 4>& cols, std::string name) {
  LatticeAuto a;
  a.name = std::move(name);
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i < 4; ++i) a.matrix[i][j] = cols[j].coords[i];
  }
  return a;
}

}  // namespace

std::int64_t LatticeAuto::det() const {
  std::int64_t d = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    const std::int64_t cof = ((j % 2 == 0) ? 1 : -1) * det3(matrix, 0, j);
    d += matrix[0][j] * cof;
  }
  return d;
}

LatticeAuto LatticeAuto::inverse() const {
  const std::int64_t d = det();
  if (d != 1 && d != -1) throw std::domain_error("lattice map is not invertible over Z");
  LatticeAuto r;
  r.name = name + "^-1";
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      // adjugate: inv[i][j] = cofactor[j][i] / det
      const std::int64_t cof = (((i + j) % 2 == 0) ? 1 : -1) * det3(matrix, j, i);
      r.matrix[i][j] = cof * d;  // d = +-1 so division is multiplication
    }
  }
  return r;
}

KClass gamma(int i) {
  if (i < 0 || i > 3) throw std::out_of_range("gamma index must be in 0..3");
  KClass v;
  v.coords[static_cast<std::size_t>(i)] = 1;
  return v;
}

KClass delta() { return KClass{{1, 1, 1, 1}}; }

LatticeAuto identity_auto() {
  return from_columns({gamma(0), gamma(1), gamma(2), gamma(3)}, "id");
}

// Psi(S_i) = S_{i+1}.
LatticeAuto psi() { return from_columns({gamma(1), gamma(2), gamma(3), gamma(0)}, "psi"); }

LatticeAuto phi() {
  LatticeAuto p = psi() * psi();
  p.name = "phi";
  return p;
}

LatticeAuto t() {
  LatticeAuto a;
  a.name = "t";
  a.matrix = {{{2, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 2, -1}, {0, 0, 1, 0}}};
  return a;
}

LatticeAuto t_psi() {
  LatticeAuto a;
  a.name = "t_psi";
  a.matrix = {{{0, 0, 0, 1}, {0, 2, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 2}}};
  return a;
}

KClass apply(const LatticeAuto& a, const KClass& v) {
  KClass r;
  for (std::size_t i = 0; i < 4; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < 4; ++j) s += a.matrix[i][j] * v.coords[j];
    r.coords[i] = s;
  }
  return r;
}

QuotClass project(const KClass& v) {
  return QuotClass{{v.coords[0] + v.coords[2], v.coords[1] + v.coords[3]}};
}

bool preserves_kernel(const LatticeAuto& a) {
  const QuotClass zero{};
  return project(apply(a, gamma(0) - gamma(2))) == zero &&
         project(apply(a, gamma(1) - gamma(3))) == zero;
}

IntMatrix2 quotient_action(const LatticeAuto& a) {
  if (!preserves_kernel(a)) {
    throw std::domain_error("automorphism " + a.name + " does not preserve the anti-invariant subgroup");
  }
  const QuotClass c0 = project(apply(a, gamma(0)));
  const QuotClass c1 = project(apply(a, gamma(1)));
  return IntMatrix2{{{c0[0], c1[0]}, {c0[1], c1[1]}}};
}

IntMatrix2 mul(const IntMatrix2& a, const IntMatrix2& b) {
  IntMatrix2 r{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return r;
}

QuotClass apply(const IntMatrix2& m, const QuotClass& v) {
  return QuotClass{{m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]}};
}

IntMatrix2 identity2() { return IntMatrix2{{{1, 0}, {0, 1}}}; }

std::vector<QuotClass> delta_set(int n_max) {
  std::vector<QuotClass> out;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    out.push_back(QuotClass{{n, n + 1}});
    out.push_back(QuotClass{{n + 1, n}});
  }
  out.push_back(QuotClass{{1, 1}});
  out.push_back(QuotClass{{-1, -1}});
  return out;
}

bool in_delta_up_to_sign(const QuotClass& v) {
  QuotClass w = v;
  if (w[0] < 0 || w[1] < 0) w = -w;
  if (w[0] < 0 || w[1] < 0) return false;
  if (w[0] == 1 && w[1] == 1) return true;
  return std::llabs(w[0] - w[1]) == 1;
}

std::int64_t tits_form_k2(std::int64_t p, std::int64_t q) {
  // chi(S_i, S_j) = delta_ij - n_ji with n_01 = 2 (two arrows 0 -> 1).
  constexpr std::int64_t arrows[2][2] = {{0, 2}, {0, 0}};
  const std::int64_t alpha[2] = {p, q};
  std::int64_t total = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      total += alpha[i] * alpha[j] * ((i == j ? 1 : 0) - arrows[j][i]);
    }
  }
  return total;
}

}  // namespace invstab
