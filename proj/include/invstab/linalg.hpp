#pragma once

// Dense matrices over an exact field given by a small policy object, with
// row reduction, rank, kernel, inverse and determinant.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "invstab/rational.hpp"

namespace invstab {

struct RationalField {
  using Elem = Rational;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
};

/// Z/pZ for a prime p that fits comfortably in 32 bits.
struct PrimeField {
  using Elem = std::int64_t;
  std::int64_t p = 5;

  explicit PrimeField(std::int64_t prime) : p(prime) {
    if (prime < 2) throw std::invalid_argument("field characteristic must be a prime >= 2");
    for (std::int64_t d = 2; d * d <= prime; ++d) {
      if (prime % d == 0) throw std::invalid_argument("field characteristic must be prime");
    }
  }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const { return ((v % p) + p) % p; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a - b + p) % p; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return (p - a) % p; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    Elem r = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(Elem a) const { return a == 0; }
};

template <class Field>
struct Matrix {
  using Elem = typename Field::Elem;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const Elem& fill) : rows(r), cols(c), data(r * c, fill) {}

  static Matrix zeros(const Field& f, std::size_t r, std::size_t c) { return Matrix(r, c, f.zero()); }
  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m = zeros(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  Elem& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  bool operator==(const Matrix&) const = default;

  Matrix transpose() const {
    Matrix t;
    t.rows = cols;
    t.cols = rows;
    t.data.resize(data.size());
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }
};

template <class Field>
Matrix<Field> multiply(const Field& f, const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix dimensions do not match");
  Matrix<Field> c = Matrix<Field>::zeros(f, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
    }
  }
  return c;
}

template <class Field>
Matrix<Field> add(const Field& f, const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix dimensions do not match");
  Matrix<Field> c = a;
  for (std::size_t k = 0; k < c.data.size(); ++k) c.data[k] = f.add(a.data[k], b.data[k]);
  return c;
}

template <class Field>
Matrix<Field> scale(const Field& f, const typename Field::Elem& s, const Matrix<Field>& a) {
  Matrix<Field> c = a;
  for (auto& x : c.data) x = f.mul(s, x);
  return c;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class Field>
std::vector<std::size_t> rref(const Field& f, Matrix<Field>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(row, j));
    }
    const auto inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      const auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Field>
std::size_t rank(const Field& f, Matrix<Field> m) {
  return rref(f, m).size();
}

/// Basis of {x : m x = 0}, one column vector per entry.
template <class Field>
std::vector<std::vector<typename Field::Elem>> nullspace(const Field& f, Matrix<Field> m) {
  const auto pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename Field::Elem>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename Field::Elem> v(m.cols, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Throws std::domain_error when m is singular or not square.
template <class Field>
Matrix<Field> inverse(const Field& f, const Matrix<Field>& m) {
  if (m.rows != m.cols) throw std::domain_error("inverse of a non-square matrix");
  const std::size_t n = m.rows;
  Matrix<Field> aug = Matrix<Field>::zeros(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  const auto pivots = rref(f, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix<Field> out = Matrix<Field>::zeros(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

template <class Field>
typename Field::Elem determinant(const Field& f, Matrix<Field> m) {
  if (m.rows != m.cols) throw std::domain_error("determinant of a non-square matrix");
  auto det = f.one();
  for (std::size_t col = 0; col < m.cols; ++col) {
    std::size_t sel = col;
    while (sel < m.rows && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows) return f.zero();
    if (sel != col) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(col, col));
    const auto inv = f.inv(m(col, col));
    for (std::size_t i = col + 1; i < m.rows; ++i) {
      if (f.is_zero(m(i, col))) continue;
      const auto factor = f.mul(m(i, col), inv);
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(col, j)));
    }
  }
  return det;
}

}  // namespace invstab
