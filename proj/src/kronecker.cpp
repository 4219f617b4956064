#include "invstab/kronecker.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace invstab {

FieldTag FieldTag::fp(std::int64_t p) {
  PrimeField check(p);
  return FieldTag{check.p};
}

std::string FieldTag::str() const { return is_rational() ? "Q" : "F" + std::to_string(prime); }

FieldTag FieldTag::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    std::size_t used = 0;
    long long p = 0;
    try {
      p = std::stoll(text.substr(1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == text.size() - 1) return fp(p);
  }
  throw std::invalid_argument("unknown field tag '" + text + "' (expected Q or F<prime>)");
}

void KroneckerRep::validate() const {
  for (const QMatrix* m : {&A, &B}) {
    if (m->rows != p || m->cols != q) throw std::invalid_argument("Kronecker maps must be p x q matrices");
    if (field.is_rational()) continue;
    for (const Rational& x : m->data) {
      if (x.get_den() != 1 || sgn(x) < 0 || x >= field.prime) {
        throw std::invalid_argument("entries over " + field.str() + " must be residues 0.." +
                                    std::to_string(field.prime - 1));
      }
    }
  }
}

KroneckerRep make_rep(FieldTag field, std::size_t p, std::size_t q, QMatrix A, QMatrix B) {
  KroneckerRep r{field, p, q, std::move(A), std::move(B)};
  r.validate();
  return r;
}

P1Point P1Point::from_pair(const Rational& a, const Rational& b) {
  if (sgn(b) != 0) return finite(a / b);
  if (sgn(a) == 0) throw std::invalid_argument("[0:0] is not a point of P1");
  return infinity();
}

std::string P1Point::str() const { return infinite ? "[1:0]" : "[" + to_string(value) + ":1]"; }

namespace {

const RationalField kQ;

Rational reduce_entry(const Rational& x, std::int64_t prime) {
  const PrimeField f(prime);
  const Integer pz(static_cast<long>(prime));
  Integer num = x.get_num() % pz;
  Integer den = x.get_den() % pz;
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(prime));
  const auto n = f.from_int(num.get_si());
  const auto d = f.from_int(den.get_si());
  return Rational(static_cast<long>(f.mul(n, f.inv(d))));
}

QMatrix reduce_matrix(const QMatrix& m, FieldTag field) {
  if (field.is_rational()) return m;
  QMatrix out = m;
  for (auto& x : out.data) x = reduce_entry(x, field.prime);
  return out;
}

FpMatrix to_fp(const QMatrix& m, const PrimeField& f) {
  FpMatrix out = FpMatrix::zeros(f, m.rows, m.cols);
  for (std::size_t k = 0; k < m.data.size(); ++k) out.data[k] = f.from_int(m.data[k].get_num().get_si());
  return out;
}

// Nilpotent Jordan block: ones on the superdiagonal.
QMatrix nilpotent(std::size_t m) {
  QMatrix n = QMatrix::zeros(kQ, m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) n(i, i + 1) = 1;
  return n;
}

template <class Field>
std::size_t dim_hom_impl(const Field& f, const Matrix<Field>& AM, const Matrix<Field>& BM, const Matrix<Field>& AN,
                         const Matrix<Field>& BN, std::size_t pM, std::size_t qM, std::size_t pN, std::size_t qN) {
  // Unknowns f0 (pN x pM) then f1 (qN x qM); equations f0 X_M = X_N f1.
  const std::size_t n0 = pN * pM;
  const std::size_t unknowns = n0 + qN * qM;
  if (unknowns == 0) return 0;
  Matrix<Field> sys = Matrix<Field>::zeros(f, 2 * pN * qM, unknowns);
  std::size_t row = 0;
  for (int which = 0; which < 2; ++which) {
    const Matrix<Field>& XM = which == 0 ? AM : BM;
    const Matrix<Field>& XN = which == 0 ? AN : BN;
    for (std::size_t i = 0; i < pN; ++i) {
      for (std::size_t j = 0; j < qM; ++j, ++row) {
        for (std::size_t k = 0; k < pM; ++k) sys(row, i * pM + k) = f.add(sys(row, i * pM + k), XM(k, j));
        for (std::size_t k = 0; k < qN; ++k) {
          sys(row, n0 + k * qM + j) = f.sub(sys(row, n0 + k * qM + j), XN(i, k));
        }
      }
    }
  }
  return unknowns - rank(f, sys);
}

}  // namespace

KroneckerRep indecomposable(std::size_t p, std::size_t q, std::optional<P1Point> lambda, FieldTag field) {
  QMatrix A = QMatrix::zeros(kQ, p, q);
  QMatrix B = QMatrix::zeros(kQ, p, q);
  if (p == q) {
    if (!lambda) throw std::invalid_argument("class (m,m) needs a point lambda of P1");
    if (p == 0) throw std::invalid_argument("class (0,0) has no indecomposable");
    const QMatrix N = nilpotent(p);
    if (lambda->infinite) {
      A = N;
      B = QMatrix::identity(kQ, p);
    } else {
      A = QMatrix::identity(kQ, p);
      B = add(kQ, scale(kQ, lambda->value, A), N);
    }
  } else {
    if (lambda) throw std::invalid_argument("a real root class takes no lambda");
    if (p + 1 == q) {
      for (std::size_t i = 0; i < p; ++i) {
        A(i, i) = 1;
        B(i, i + 1) = 1;
      }
    } else if (q + 1 == p) {
      for (std::size_t i = 0; i < q; ++i) {
        A(i, i) = 1;
        B(i + 1, i) = 1;
      }
    } else {
      throw std::invalid_argument("(" + std::to_string(p) + "," + std::to_string(q) + ") is not a root");
    }
  }
  return make_rep(field, p, q, reduce_matrix(A, field), reduce_matrix(B, field));
}

KroneckerRep companion_block(const std::vector<Rational>& lower_coeffs, FieldTag field) {
  const std::size_t n = lower_coeffs.size();
  if (n == 0) throw std::invalid_argument("companion block needs a polynomial of degree >= 1");
  QMatrix B = QMatrix::zeros(kQ, n, n);
  for (std::size_t i = 1; i < n; ++i) B(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) B(i, n - 1) = -lower_coeffs[i];
  return make_rep(field, n, n, QMatrix::identity(kQ, n), reduce_matrix(B, field));
}

KroneckerRep simple_c0(FieldTag field) { return indecomposable(1, 0, std::nullopt, field); }
KroneckerRep simple_c1(FieldTag field) { return indecomposable(0, 1, std::nullopt, field); }

KroneckerRep direct_sum(const KroneckerRep& M, const KroneckerRep& N) {
  if (!(M.field == N.field)) throw std::invalid_argument("direct sum over different fields");
  const std::size_t p = M.p + N.p;
  const std::size_t q = M.q + N.q;
  QMatrix A = QMatrix::zeros(kQ, p, q);
  QMatrix B = QMatrix::zeros(kQ, p, q);
  for (std::size_t i = 0; i < M.p; ++i) {
    for (std::size_t j = 0; j < M.q; ++j) {
      A(i, j) = M.A(i, j);
      B(i, j) = M.B(i, j);
    }
  }
  for (std::size_t i = 0; i < N.p; ++i) {
    for (std::size_t j = 0; j < N.q; ++j) {
      A(M.p + i, M.q + j) = N.A(i, j);
      B(M.p + i, M.q + j) = N.B(i, j);
    }
  }
  return make_rep(M.field, p, q, std::move(A), std::move(B));
}

namespace {

template <class Field>
std::pair<Matrix<Field>, Matrix<Field>> conjugate(const Field& f, const Matrix<Field>& A, const Matrix<Field>& B,
                                                  const Matrix<Field>& P, const Matrix<Field>& Q) {
  (void)inverse(f, P);  // rejects a singular P
  const Matrix<Field> Qinv = inverse(f, Q);
  return {multiply(f, multiply(f, P, A), Qinv), multiply(f, multiply(f, P, B), Qinv)};
}

QMatrix from_fp(const FpMatrix& m) {
  QMatrix out = QMatrix::zeros(kQ, m.rows, m.cols);
  for (std::size_t k = 0; k < m.data.size(); ++k) out.data[k] = Rational(static_cast<long>(m.data[k]));
  return out;
}

}  // namespace

KroneckerRep change_basis(const KroneckerRep& M, const QMatrix& P, const QMatrix& Q) {
  if (P.rows != M.p || P.cols != M.p || Q.rows != M.q || Q.cols != M.q) {
    throw std::invalid_argument("basis change has the wrong size");
  }
  if (M.field.is_rational()) {
    if (M.p > 0) (void)inverse(kQ, P);
    if (M.q > 0) (void)inverse(kQ, Q);
    if (M.p == 0 || M.q == 0) return M;
    auto [A, B] = conjugate(kQ, M.A, M.B, P, Q);
    return make_rep(M.field, M.p, M.q, std::move(A), std::move(B));
  }
  const PrimeField f(M.field.prime);
  const FpMatrix Pf = to_fp(reduce_matrix(P, M.field), f);
  const FpMatrix Qf = to_fp(reduce_matrix(Q, M.field), f);
  if (M.p > 0) (void)inverse(f, Pf);
  if (M.q > 0) (void)inverse(f, Qf);
  if (M.p == 0 || M.q == 0) return M;
  auto [A, B] = conjugate(f, to_fp(M.A, f), to_fp(M.B, f), Pf, Qf);
  return make_rep(M.field, M.p, M.q, from_fp(A), from_fp(B));
}

KroneckerRep reduce_mod_p(const KroneckerRep& M, std::int64_t prime) {
  if (!M.field.is_rational()) throw std::invalid_argument("reduce_mod_p expects a rational representation");
  const FieldTag f = FieldTag::fp(prime);
  return make_rep(f, M.p, M.q, reduce_matrix(M.A, f), reduce_matrix(M.B, f));
}

std::size_t dim_hom(const KroneckerRep& M, const KroneckerRep& N) {
  if (!(M.field == N.field)) throw std::invalid_argument("dim_hom over different fields");
  if (M.field.is_rational()) return dim_hom_impl(kQ, M.A, M.B, N.A, N.B, M.p, M.q, N.p, N.q);
  const PrimeField f(M.field.prime);
  return dim_hom_impl(f, to_fp(M.A, f), to_fp(M.B, f), to_fp(N.A, f), to_fp(N.B, f), M.p, M.q, N.p, N.q);
}

void StabilityFunctionK2::validate() const {
  for (const ExactComplex* z : {&zC0, &zC1}) {
    if (z->is_zero() || !in_H(*z)) throw std::domain_error("Z(C0) and Z(C1) must be nonzero points of H");
  }
}

ExactComplex StabilityFunctionK2::operator()(std::int64_t a, std::int64_t b) const {
  return Rational(static_cast<long>(a)) * zC0 + Rational(static_cast<long>(b)) * zC1;
}

namespace {

// Calls visit(basis) for every subspace of F^q, each given by its RREF basis.
template <class Visit>
void for_each_subspace(const PrimeField& f, std::size_t q, Visit&& visit) {
  for (unsigned mask = 0; mask < (1u << q); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < q; ++c) {
      if (mask & (1u << c)) pivots.push_back(c);
    }
    // Free slots: (row r, column c) with c > pivot r and c not a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (std::size_t c = pivots[r] + 1; c < q; ++c) {
        if (!(mask & (1u << c))) free_slots.emplace_back(r, c);
      }
    }
    std::vector<std::int64_t> digits(free_slots.size(), 0);
    for (;;) {
      FpMatrix basis = FpMatrix::zeros(f, pivots.size(), q);
      for (std::size_t r = 0; r < pivots.size(); ++r) basis(r, pivots[r]) = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s) basis(free_slots[s].first, free_slots[s].second) = digits[s];
      visit(basis);
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == f.p) digits[s++] = 0;
      if (s == digits.size()) break;
    }
  }
}

}  // namespace

SemistabilityVerdict semistable_bruteforce(const KroneckerRep& M, const StabilityFunctionK2& Z,
                                           const BruteforceBudget& budget) {
  Z.validate();
  if (M.field.is_rational()) throw std::domain_error("brute-force semistability needs a prime field");
  if (M.is_zero()) throw std::domain_error("the zero representation has no phase");
  if (M.q > budget.max_q || M.field.prime > budget.max_field) {
    throw std::length_error("enumeration budget exceeded: q <= " + std::to_string(budget.max_q) +
                            " and field size <= " + std::to_string(budget.max_field) + " required");
  }
  M.validate();
  const PrimeField f(M.field.prime);
  const FpMatrix A = to_fp(M.A, f);
  const FpMatrix B = to_fp(M.B, f);

  // realizable[a][b]: some subrepresentation has class (a, b).
  std::vector<std::vector<bool>> realizable(M.p + 1, std::vector<bool>(M.q + 1, false));
  for_each_subspace(f, M.q, [&](const FpMatrix& basis) {
    const std::size_t k = basis.rows;
    std::size_t w = 0;
    if (k > 0 && M.p > 0) {
      // Columns A u_r and B u_r span the minimal compatible V0-part.
      const FpMatrix ut = basis.transpose();
      const FpMatrix au = multiply(f, A, ut);
      const FpMatrix bu = multiply(f, B, ut);
      FpMatrix span = FpMatrix::zeros(f, M.p, 2 * k);
      for (std::size_t i = 0; i < M.p; ++i) {
        for (std::size_t r = 0; r < k; ++r) {
          span(i, r) = au(i, r);
          span(i, k + r) = bu(i, r);
        }
      }
      w = rank(f, span);
    }
    for (std::size_t a = w; a <= M.p; ++a) realizable[a][k] = true;
  });

  const ExactComplex whole = Z(static_cast<std::int64_t>(M.p), static_cast<std::int64_t>(M.q));
  SemistabilityVerdict verdict{true, true, std::nullopt};
  std::optional<std::pair<std::int64_t, std::int64_t>> best;
  for (std::size_t a = 0; a <= M.p; ++a) {
    for (std::size_t b = 0; b <= M.q; ++b) {
      if (!realizable[a][b] || (a == 0 && b == 0) || (a == M.p && b == M.q)) continue;
      const std::pair<std::int64_t, std::int64_t> cls{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)};
      const ExactComplex z = Z(cls.first, cls.second);
      const auto cmp = phase_cmp(z, whole);
      if (cmp == std::strong_ordering::greater) verdict.semistable = false;
      if (cmp != std::strong_ordering::less) verdict.stable = false;
      if (!best) {
        best = cls;
        continue;
      }
      const auto vs = phase_cmp(z, Z(best->first, best->second));
      const std::int64_t total = cls.first + cls.second;
      const std::int64_t best_total = best->first + best->second;
      if (vs == std::strong_ordering::greater || (vs == std::strong_ordering::equal && total > best_total)) {
        best = cls;
      }
    }
  }
  if (!verdict.stable) verdict.witness = best;
  return verdict;
}

std::pair<std::size_t, std::size_t> PencilBlock::dims() const {
  switch (kind) {
    case Kind::sub_root:
      return {n, n + 1};
    case Kind::quotient_root:
      return {n + 1, n};
    case Kind::regular: {
      const std::size_t d = at_infinity ? 1 : static_cast<std::size_t>(minpoly.degree());
      return {d * multiplicity, d * multiplicity};
    }
  }
  return {0, 0};
}

std::string PencilBlock::str() const {
  const auto [p, q] = dims();
  const std::string cls = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  switch (kind) {
    case Kind::sub_root:
      return "sub-root " + cls;
    case Kind::quotient_root:
      return "quotient-root " + cls;
    case Kind::regular:
      return "regular " + (at_infinity ? std::string("inf") : minpoly.str()) + " m=" + std::to_string(multiplicity);
  }
  return "";
}

bool PencilBlock::operator==(const PencilBlock& o) const {
  return kind == o.kind && n == o.n && minpoly == o.minpoly && at_infinity == o.at_infinity &&
         multiplicity == o.multiplicity;
}

bool PencilBlock::operator<(const PencilBlock& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (n != o.n) return n < o.n;
  if (at_infinity != o.at_infinity) return at_infinity < o.at_infinity;
  if (!(minpoly == o.minpoly)) return minpoly < o.minpoly;
  return multiplicity < o.multiplicity;
}

namespace {

// Dimension of the space of polynomial kernel vectors of degree <= d of the
// pencil A + tB: coefficients x_0..x_d with A x_j + B x_{j-1} = 0.
std::size_t kernel_count(const QMatrix& A, const QMatrix& B, std::size_t d) {
  const std::size_t p = A.rows;
  const std::size_t q = A.cols;
  const std::size_t unknowns = (d + 1) * q;
  if (p == 0) return unknowns;
  QMatrix sys = QMatrix::zeros(kQ, (d + 2) * p, unknowns);
  for (std::size_t j = 0; j <= d + 1; ++j) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t c = 0; c < q; ++c) {
        if (j <= d) sys(j * p + i, j * q + c) = A(i, c);
        if (j >= 1) sys(j * p + i, (j - 1) * q + c) = B(i, c);
      }
    }
  }
  return unknowns - rank(kQ, sys);
}

// Number of blocks (e, e+1) for e = 0..q-1, from second differences of the
// kernel counts.
std::vector<std::size_t> minimal_indices(const QMatrix& A, const QMatrix& B) {
  const std::size_t q = A.cols;
  std::vector<long> N;
  std::vector<std::size_t> counts;
  for (std::size_t d = 0; d < q; ++d) {
    N.push_back(static_cast<long>(kernel_count(A, B, d)));
    const long n1 = d >= 1 ? N[d - 1] : 0;
    const long n2 = d >= 2 ? N[d - 2] : 0;
    const long c = N[d] - 2 * n1 + n2;
    if (c < 0) throw std::logic_error("negative minimal-index count");
    counts.push_back(static_cast<std::size_t>(c));
  }
  return counts;
}

PolyMatrix pencil(const QMatrix& A, const QMatrix& B, bool homogeneous_at_infinity) {
  // B - xA for finite points, yB - A for the point at infinity.
  PolyMatrix m(A.rows, std::vector<Polynomial>(A.cols));
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) {
      m[i][j] = homogeneous_at_infinity ? Polynomial(std::vector<Rational>{-A(i, j), B(i, j)})
                                        : Polynomial(std::vector<Rational>{B(i, j), -A(i, j)});
    }
  }
  return m;
}

}  // namespace

std::vector<PencilBlock> kronecker_canonical_form(const KroneckerRep& M) {
  if (!M.field.is_rational()) throw std::domain_error("canonical form is computed over Q");
  M.validate();
  std::vector<PencilBlock> blocks;
  const auto subs = minimal_indices(M.A, M.B);
  for (std::size_t e = 0; e < subs.size(); ++e) {
    for (std::size_t k = 0; k < subs[e]; ++k) blocks.push_back(PencilBlock{PencilBlock::Kind::sub_root, e, {}, false, 0});
  }
  const auto quots = minimal_indices(M.A.transpose(), M.B.transpose());
  for (std::size_t e = 0; e < quots.size(); ++e) {
    for (std::size_t k = 0; k < quots[e]; ++k) {
      blocks.push_back(PencilBlock{PencilBlock::Kind::quotient_root, e, {}, false, 0});
    }
  }
  for (const Polynomial& inv : invariant_factors(pencil(M.A, M.B, false))) {
    if (inv.degree() < 1) continue;
    for (const auto& [f, e] : factor_over_q(inv)) {
      blocks.push_back(PencilBlock{PencilBlock::Kind::regular, 0, f, false, static_cast<std::size_t>(e)});
    }
  }
  for (const Polynomial& inv : invariant_factors(pencil(M.A, M.B, true))) {
    std::size_t v = 0;
    while (static_cast<int>(v) <= inv.degree() && sgn(inv.coeff(static_cast<int>(v))) == 0) ++v;
    if (v > 0) blocks.push_back(PencilBlock{PencilBlock::Kind::regular, 0, {}, true, v});
  }
  std::sort(blocks.begin(), blocks.end());

  std::size_t sp = 0, sq = 0;
  for (const auto& b : blocks) {
    sp += b.dims().first;
    sq += b.dims().second;
  }
  if (sp != M.p || sq != M.q) throw std::logic_error("canonical form does not account for the dimension vector");
  return blocks;
}

KroneckerRep block_representative(const PencilBlock& b) {
  const auto [p, q] = b.dims();
  if (b.kind != PencilBlock::Kind::regular) return indecomposable(p, q);
  if (b.at_infinity) return indecomposable(p, q, P1Point::infinity());
  bool integral = true;
  for (const Rational& c : b.minpoly.coeffs()) integral = integral && c.get_den() == 1;
  Polynomial g(Rational(1));
  for (std::size_t k = 0; k < b.multiplicity; ++k) g = g * b.minpoly;
  if (integral) {
    if (b.minpoly.degree() == 1) return indecomposable(p, q, P1Point::finite(-b.minpoly.coeff(0)));
    std::vector<Rational> lower(g.coeffs().begin(), g.coeffs().end() - 1);
    return companion_block(lower);
  }
  // Companion pencil of the primitive integer multiple c_d x^d + ... + c_0:
  // A = diag(1, ..., 1, c_d), B with subdiagonal ones and last column -c_k,
  // so det(xA - B) = c_d x^d + ... + c_0 and every reduction mod p stays regular.
  const Polynomial h = g.primitive();
  const auto d = static_cast<std::size_t>(h.degree());
  QMatrix A = QMatrix::identity(kQ, d);
  QMatrix B = QMatrix::zeros(kQ, d, d);
  A(d - 1, d - 1) = h.leading();
  for (std::size_t i = 1; i < d; ++i) B(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) B(i, d - 1) = -h.coeff(static_cast<int>(i));
  return make_rep(FieldTag::rationals(), d, d, A, B);
}

std::vector<HNFactor> hn_filtration(const KroneckerRep& M, const StabilityFunctionK2& Z) {
  Z.validate();
  if (!M.field.is_rational()) throw std::domain_error("HN filtration is computed over Q");
  if (M.is_zero()) throw std::domain_error("the zero representation has no HN filtration");
  M.validate();
  const auto P = static_cast<std::int64_t>(M.p);
  const auto Q = static_cast<std::int64_t>(M.q);
  const auto order = phase_cmp(Z.zC0, Z.zC1);
  std::vector<HNFactor> out;

  if (order == std::strong_ordering::equal) {
    out.push_back(HNFactor{{P, Q}, Z(P, Q), "M", M});
    return out;
  }
  if (order == std::strong_ordering::greater) {
    // (V0, 0) is the maximal destabilizing subobject.
    KroneckerRep zero = make_rep(M.field, 0, 0, QMatrix::zeros(kQ, 0, 0), QMatrix::zeros(kQ, 0, 0));
    if (P > 0) {
      KroneckerRep c0 = zero;
      for (std::int64_t k = 0; k < P; ++k) c0 = direct_sum(c0, simple_c0());
      out.push_back(HNFactor{{P, 0}, Z(P, 0), "C0^" + std::to_string(P), c0});
    }
    if (Q > 0) {
      KroneckerRep c1 = zero;
      for (std::int64_t k = 0; k < Q; ++k) c1 = direct_sum(c1, simple_c1());
      out.push_back(HNFactor{{0, Q}, Z(0, Q), "C1^" + std::to_string(Q), c1});
    }
    return out;
  }

  // Every block is stable here; group the blocks by phase.
  std::vector<PencilBlock> blocks = kronecker_canonical_form(M);
  auto phase_of = [&](const PencilBlock& b) {
    const auto [p, q] = b.dims();
    return Z(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
  };
  std::stable_sort(blocks.begin(), blocks.end(), [&](const PencilBlock& l, const PencilBlock& r) {
    return phase_cmp(phase_of(l), phase_of(r)) == std::strong_ordering::greater;
  });
  for (const PencilBlock& b : blocks) {
    const auto [p, q] = b.dims();
    const bool joins = !out.empty() && phase_cmp(out.back().charge, phase_of(b)) == std::strong_ordering::equal;
    if (!joins) {
      out.push_back(HNFactor{{0, 0}, ExactComplex(), "",
                             make_rep(M.field, 0, 0, QMatrix::zeros(kQ, 0, 0), QMatrix::zeros(kQ, 0, 0))});
    }
    HNFactor& f = out.back();
    f.cls.first += static_cast<std::int64_t>(p);
    f.cls.second += static_cast<std::int64_t>(q);
    f.charge = Z(f.cls.first, f.cls.second);
    f.descriptor += (f.descriptor.empty() ? "" : " + ") + b.str();
    f.rep = direct_sum(f.rep, block_representative(b));
  }
  return out;
}

Embedding parse_embedding(const std::string& name) {
  static const std::map<std::string, Embedding> names{
      {"I1", Embedding::I1}, {"I2", Embedding::I2}, {"II1", Embedding::II1}, {"II2", Embedding::II2}};
  const auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown embedding '" + name + "'");
  return it->second;
}

KClass embed_class(std::int64_t p, std::int64_t q, Embedding which) {
  switch (which) {
    case Embedding::I1:
      return p * gamma(0) + q * gamma(1);
    case Embedding::I2:
      return p * gamma(2) + q * gamma(3);
    case Embedding::II1:
      return p * gamma(1) + q * gamma(2);
    case Embedding::II2:
      return p * gamma(3) + q * gamma(0);
  }
  return KClass{};
}

}  // namespace invstab
