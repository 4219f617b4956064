#pragma once

// Shared fixtures: seeded random representations, random invertible
// matrices, and an independent semistability oracle over F_p that only
// enumerates subspaces of V1.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "invstab/charge.hpp"
#include "invstab/kronecker.hpp"

namespace testsupport {

using invstab::ExactComplex;
using invstab::FieldTag;
using invstab::KroneckerRep;
using invstab::P1Point;
using invstab::PencilBlock;
using invstab::QMatrix;
using invstab::Rational;
using invstab::RationalField;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline QMatrix random_matrix(std::size_t r, std::size_t c, long lo, long hi) {
  QMatrix m = QMatrix::zeros(RationalField{}, r, c);
  for (auto& x : m.data) x = Rational(uniform(lo, hi));
  return m;
}

// Small rational entries with denominators in {1, 2, 3}.
inline QMatrix random_rational_matrix(std::size_t r, std::size_t c) {
  QMatrix m = QMatrix::zeros(RationalField{}, r, c);
  for (auto& x : m.data) {
    Rational v(uniform(-3, 3), uniform(1, 3));
    v.canonicalize();
    x = v;
  }
  return m;
}

inline QMatrix random_invertible(std::size_t n, long lo = -2, long hi = 2) {
  const RationalField f;
  for (;;) {
    QMatrix m = random_matrix(n, n, lo, hi);
    if (invstab::rank(f, m) == n) return m;
  }
}

inline QMatrix random_invertible_mod(std::size_t n, std::int64_t p) {
  const invstab::PrimeField f(p);
  for (;;) {
    QMatrix m = random_matrix(n, n, 0, p - 1);
    invstab::FpMatrix fm(n, n, 0);
    for (std::size_t i = 0; i < m.data.size(); ++i) fm.data[i] = m.data[i].get_num().get_si();
    if (invstab::rank(f, fm) == n) return m;
  }
}

inline KroneckerRep random_rep_mod(std::size_t p, std::size_t q, std::int64_t prime) {
  return invstab::make_rep(FieldTag::fp(prime), p, q, random_matrix(p, q, 0, prime - 1),
                           random_matrix(p, q, 0, prime - 1));
}

// Integer-valued C(p,q) phases used throughout: case 1 has phi(C0) < phi(C1).
inline invstab::StabilityFunctionK2 case1() { return {ExactComplex(1, 1), ExactComplex(-1, 1)}; }
inline invstab::StabilityFunctionK2 case2() { return {ExactComplex(-1, 1), ExactComplex(1, 1)}; }
inline invstab::StabilityFunctionK2 equal_phase() { return {ExactComplex(1, 1), ExactComplex(2, 2)}; }

// ---- subspace oracle over F_p ----

using Vec = std::vector<std::int64_t>;

// All subspaces of F_p^n of dimension k, as lists of basis vectors (RREF).
inline std::vector<std::vector<Vec>> subspaces(std::size_t n, std::size_t k, std::int64_t p) {
  std::vector<std::vector<Vec>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (k > n) return out;
  // choose pivot columns, then free entries right of each pivot in non-pivot columns
  std::vector<std::size_t> piv(k);
  std::vector<std::vector<std::size_t>> pivot_sets;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      pivot_sets.push_back(cur);
      return;
    }
    for (std::size_t c = start; c < n; ++c) {
      cur.push_back(c);
      self(self, c + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  for (const auto& ps : pivot_sets) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = ps[r] + 1; c < n; ++c) {
        bool is_pivot = false;
        for (auto x : ps) is_pivot = is_pivot || x == c;
        if (!is_pivot) free.emplace_back(r, c);
      }
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) total *= static_cast<std::size_t>(p);
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Vec> basis(k, Vec(n, 0));
      for (std::size_t r = 0; r < k; ++r) basis[r][ps[r]] = 1;
      std::size_t c = code;
      for (const auto& [r, col] : free) {
        basis[r][col] = static_cast<std::int64_t>(c % static_cast<std::size_t>(p));
        c /= static_cast<std::size_t>(p);
      }
      out.push_back(basis);
    }
  }
  return out;
}

inline std::size_t rank_mod(std::vector<Vec> rows, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    std::int64_t inv = 1;
    for (std::int64_t t = 1; t < p; ++t) {
      if ((rows[r][c] * t) % p == 1) inv = t;
    }
    for (auto& x : rows[r]) x = (x * inv) % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const std::int64_t f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

struct Verdict {
  bool semistable;
  bool stable;
};

// Case-1 charge (phi(C0) < phi(C1)): a subrepresentation with V1-part W1 of
// dimension b is most destabilizing when W0 = A W1 + B W1 (dimension u), and
// its phase exceeds that of M iff b p > u q.
inline Verdict case1_oracle(const KroneckerRep& M) {
  const std::int64_t prime = M.field.prime;
  const auto p = static_cast<std::int64_t>(M.p);
  const auto q = static_cast<std::int64_t>(M.q);
  auto entry = [&](const QMatrix& X, std::size_t i, std::size_t j) { return X(i, j).get_num().get_si() % prime; };
  bool semistable = true;
  bool strict = true;
  for (std::size_t b = 0; b <= M.q; ++b) {
    for (const auto& basis : subspaces(M.q, b, prime)) {
      std::vector<Vec> images;
      for (const Vec& w : basis) {
        for (const QMatrix* X : {&M.A, &M.B}) {
          Vec img(M.p, 0);
          for (std::size_t i = 0; i < M.p; ++i) {
            for (std::size_t j = 0; j < M.q; ++j) img[i] = (img[i] + entry(*X, i, j) * w[j]) % prime;
          }
          images.push_back(img);
        }
      }
      const auto u = static_cast<std::int64_t>(M.p == 0 ? 0 : rank_mod(images, prime));
      const std::int64_t d = static_cast<std::int64_t>(b) * p - u * q;
      if (d > 0) semistable = false;
      if (b > 0 && static_cast<std::int64_t>(b) < q && d >= 0) strict = false;
    }
  }
  if (q == 0 && p != 1) strict = false;
  return {semistable, semistable && strict};
}

// Case-2 charge (phi(C1) < phi(C0)): (V0, 0) is always a subobject.
inline Verdict case2_oracle(const KroneckerRep& M) {
  const bool ss = M.p == 0 || M.q == 0;
  return {ss, M.p + M.q == 1};
}

// ---- random block sums for the canonical form ----

inline PencilBlock root_block(bool sub, std::size_t n) {
  PencilBlock b;
  b.kind = sub ? PencilBlock::Kind::sub_root : PencilBlock::Kind::quotient_root;
  b.n = n;
  return b;
}

inline PencilBlock regular_block(const invstab::Polynomial& f, std::size_t m) {
  PencilBlock b;
  b.kind = PencilBlock::Kind::regular;
  b.minpoly = f;
  b.multiplicity = m;
  return b;
}

inline PencilBlock infinity_block(std::size_t m) {
  PencilBlock b;
  b.kind = PencilBlock::Kind::regular;
  b.at_infinity = true;
  b.multiplicity = m;
  return b;
}

// The pencil of f^m with A = I, B = companion(f^m); built independently of
// block_representative.
inline KroneckerRep companion_of_power(const invstab::Polynomial& f, std::size_t m) {
  invstab::Polynomial g(Rational(1));
  for (std::size_t i = 0; i < m; ++i) g = g * f;
  std::vector<Rational> lower(g.coeffs().begin(), g.coeffs().end() - 1);
  return invstab::companion_block(lower);
}

inline KroneckerRep jordan_at_infinity(std::size_t m) {
  QMatrix A = QMatrix::zeros(RationalField{}, m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) A(i + 1, i) = 1;
  return invstab::make_rep(FieldTag::rationals(), m, m, A, QMatrix::identity(RationalField{}, m));
}

struct BlockSum {
  std::vector<PencilBlock> blocks;
  KroneckerRep rep;
};

// A random direct sum of blocks with p + q <= max_total.
inline BlockSum random_block_sum(std::size_t max_total) {
  using invstab::Polynomial;
  const std::vector<Polynomial> irreducible = {
      Polynomial({Rational(-2), Rational(0), Rational(1)}),   // x^2 - 2
      Polynomial({Rational(1), Rational(1), Rational(1)}),    // x^2 + x + 1
      Polynomial({Rational(-3), Rational(0), Rational(1)}),   // x^2 - 3
  };
  BlockSum out;
  out.rep = invstab::make_rep(FieldTag::rationals(), 0, 0, QMatrix::zeros(RationalField{}, 0, 0),
                              QMatrix::zeros(RationalField{}, 0, 0));
  std::size_t used = 0;
  const std::size_t target = static_cast<std::size_t>(uniform(1, static_cast<long>(max_total)));
  int guard = 0;
  while (used < target && guard++ < 50) {
    const long kind = uniform(0, 4);
    PencilBlock b;
    KroneckerRep r;
    if (kind <= 1) {
      const std::size_t n = static_cast<std::size_t>(uniform(0, 2));
      b = root_block(kind == 0, n);
      const auto [p, q] = b.dims();
      r = invstab::indecomposable(p, q);
    } else if (kind == 2) {
      const std::size_t m = static_cast<std::size_t>(uniform(1, 2));
      const Rational l = invstab::make_rational(uniform(-2, 2), uniform(1, 2));
      b = regular_block(Polynomial({Rational(-l), Rational(1)}), m);
      r = invstab::indecomposable(m, m, P1Point::finite(l));
    } else if (kind == 3) {
      const std::size_t m = static_cast<std::size_t>(uniform(1, 2));
      b = infinity_block(m);
      r = jordan_at_infinity(m);
    } else {
      const Polynomial& f = irreducible[static_cast<std::size_t>(uniform(0, 2))];
      b = regular_block(f, 1);
      r = companion_of_power(f, 1);
    }
    if (used + r.p + r.q > max_total) continue;
    used += r.p + r.q;
    out.blocks.push_back(b);
    out.rep = invstab::direct_sum(out.rep, r);
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

inline KroneckerRep conjugate_randomly(const KroneckerRep& M) {
  return invstab::change_basis(M, random_invertible(M.p), random_invertible(M.q));
}

}  // namespace testsupport
