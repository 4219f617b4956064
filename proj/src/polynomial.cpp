#include "invstab/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace invstab {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Polynomial Polynomial::x() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rational& Polynomial::coeff(int k) const {
  static const Rational zero(0);
  if (k < 0 || k > degree()) return zero;
  return c_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) v[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) v[k] += o.c_[k];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v = c_;
  for (auto& a : v) a = -a;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(v));
}

bool Polynomial::operator<(const Polynomial& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int k = degree(); k >= 0; --k) {
    if (coeff(k) != o.coeff(k)) return coeff(k) < o.coeff(k);
  }
  return false;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> v = c_;
  const Rational lead = c_.back();
  for (auto& a : v) a /= lead;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1;
  for (const auto& a : c_) den = lcm(den, a.get_den());
  Integer g = 0;
  for (const auto& a : c_) g = gcd(g, Integer(a * den));
  std::vector<Rational> v;
  for (const auto& a : c_) v.emplace_back(Integer(a * den) / g);
  if (sgn(v.back()) < 0) {
    for (auto& a : v) a = -a;
  }
  return Polynomial(std::move(v));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = coeff(k);
    if (sgn(a) == 0) continue;
    const bool first = out.empty();
    if (sgn(a) < 0) out += "-";
    else if (!first) out += "+";
    const Rational mag = abs(a);
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial q;
  Polynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const Polynomial term = Polynomial::monomial(r.leading() / b.leading(), r.degree() - b.degree());
    q = q + term;
    r = r - term * b;
  }
  return {q, r};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Divides out the factor h as often as possible; returns the multiplicity.
int strip_factor(Polynomial& f, const Polynomial& h) {
  int m = 0;
  for (;;) {
    auto [q, r] = divmod(f, h);
    if (!r.is_zero()) return m;
    f = q;
    ++m;
  }
}

// Lagrange interpolation through (xs[k], ys[k]).
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Polynomial out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Polynomial basis(Rational(1));
    Rational denom = 1;
    for (std::size_t m = 0; m < xs.size(); ++m) {
      if (m == k) continue;
      basis = basis * Polynomial(std::vector<Rational>{-xs[m], 1});
      denom *= xs[k] - xs[m];
    }
    out = out + basis * Polynomial(ys[k] / denom);
  }
  return out;
}

bool integral(const Polynomial& p) {
  for (const auto& a : p.coeffs()) {
    if (a.get_den() != 1) return false;
  }
  return true;
}

// A factor of the primitive integer polynomial g of exact degree d, found by
// Kronecker's method, or the zero polynomial if none exists.
Polynomial kronecker_factor(const Polynomial& g, int d) {
  std::vector<Rational> xs;
  std::vector<std::vector<Integer>> choices;
  for (int k = 0; static_cast<int>(xs.size()) < d + 1; ++k) {
    const Rational x = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k + 1) / 2);
    const Rational v = g.eval(x);
    if (sgn(v) == 0) continue;  // only when g has a rational root
    xs.push_back(x);
    std::vector<Integer> divs;
    for (const Integer& e : positive_divisors(v.get_num())) {
      divs.push_back(e);
      if (xs.size() > 1) divs.push_back(-e);  // first value fixed positive
    }
    choices.push_back(std::move(divs));
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  for (;;) {
    std::vector<Rational> ys;
    for (std::size_t k = 0; k < idx.size(); ++k) ys.emplace_back(choices[k][idx[k]]);
    const Polynomial h = interpolate(xs, ys);
    if (h.degree() == d && integral(h) && divmod(g, h).second.is_zero()) return h;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) return Polynomial();
  }
}

}  // namespace

std::vector<std::pair<Polynomial, int>> factor_over_q(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<std::pair<Polynomial, int>> out;
  Polynomial g = f.primitive();

  // Linear factors: roots a/b with a | constant term and b | leading term.
  for (;;) {
    if (g.degree() < 1) break;
    bool found = false;
    if (sgn(g.coeff(0)) == 0) {
      const Polynomial h = Polynomial::x();
      out.emplace_back(h, strip_factor(g, h));
      continue;
    }
    for (const Integer& a : positive_divisors(g.coeff(0).get_num())) {
      for (const Integer& b : positive_divisors(g.leading().get_num())) {
        for (int s : {1, -1}) {
          Rational r(s * a, b);
          r.canonicalize();
          if (sgn(g.eval(r)) != 0) continue;
          const Polynomial h(std::vector<Rational>{-r, 1});
          out.emplace_back(h, strip_factor(g, h));
          g = g.primitive();
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }

  // Higher-degree factors, smallest degree first so each one found is irreducible.
  for (int d = 2; 2 * d <= g.degree(); ++d) {
    for (;;) {
      const Polynomial h = kronecker_factor(g, d);
      if (h.is_zero()) break;
      out.emplace_back(h.monic(), strip_factor(g, h));
      g = g.primitive();
      if (2 * d > g.degree()) break;
    }
  }
  if (g.degree() >= 1) out.emplace_back(g.monic(), 1);

  // Merge equal factors and sort.
  for (auto& [h, m] : out) h = h.monic();
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<std::pair<Polynomial, int>> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
    else merged.push_back(e);
  }
  return merged;
}

std::vector<Polynomial> invariant_factors(PolyMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<Polynomial> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: a nonzero entry of least degree in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j].is_zero()) continue;
          if (pi == rows || m[i][j].degree() < m[pi][pj].degree()) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) return out;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t].is_zero()) continue;
        const Polynomial q = divmod(m[i][t], m[t][t]).first;
        for (std::size_t j = t; j < cols; ++j) m[i][j] = m[i][j] - q * m[t][j];
        if (!m[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j].is_zero()) continue;
        const Polynomial q = divmod(m[t][j], m[t][t]).first;
        for (std::size_t i = t; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][t];
        if (!m[t][j].is_zero()) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the rest; otherwise fold an offending row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!divmod(m[i][j], m[t][t]).second.is_zero()) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] = m[t][k] + m[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.push_back(m[t][t].monic());
  }
  return out;
}

}  // namespace invstab
