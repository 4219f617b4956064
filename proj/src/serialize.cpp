#include "invstab/serialize.hpp"

#include <stdexcept>

namespace invstab {

Json to_json(const KClass& v) { return Json::array({v[0], v[1], v[2], v[3]}); }

Json to_json(const QuotClass& v) { return Json::array({v[0], v[1]}); }

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const KroneckerRep& M) {
  return Json{{"p", M.p}, {"q", M.q}, {"field", M.field.str()}, {"A", to_json(M.A)}, {"B", to_json(M.B)}};
}

Json to_json(const Heart& h) {
  Json simples = Json::array();
  for (const SimpleObject& s : h.simples) simples.push_back(Json{{"class", to_json(s.kclass)}, {"label", s.label.str()}});
  return simples;
}

Json to_json(const StableCatalogEntry& e) {
  return Json{{"class", to_json(e.kclass)}, {"quot", to_json(e.quot)}, {"label", e.label.str()},
              {"family", e.family ? "P1-family" : "unique"}, {"n", e.n}, {"note", e.note}};
}

Json to_json(const Crossing& c) {
  return Json{{"segment", c.segment}, {"parameter", to_string(c.parameter)}, {"point", c.point.str()},
              {"wall", c.wall.str()}, {"word", c.word.str()}};
}

Json to_json(const HNFactor& f) {
  return Json{{"class", Json::array({f.cls.first, f.cls.second})}, {"charge", f.charge.str()}, {"factor", f.descriptor}};
}

Json to_json(const PencilBlock& b) {
  const auto [p, q] = b.dims();
  return Json{{"block", b.str()}, {"class", Json::array({p, q})}};
}

namespace {

QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const char* name) {
  if (!j.is_array() || j.size() != rows) {
    throw std::invalid_argument(std::string("matrix ") + name + " must have " + std::to_string(rows) + " rows");
  }
  QMatrix m = QMatrix::zeros(RationalField{}, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw std::invalid_argument(std::string("matrix ") + name + " must have " + std::to_string(cols) + " columns");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& x = j[i][k];
      if (x.is_string()) m(i, k) = parse_rational(x.get<std::string>());
      else if (x.is_number_integer()) m(i, k) = Rational(x.get<long>());
      else throw std::invalid_argument(std::string("entries of ") + name + " must be rational strings or integers");
    }
  }
  return m;
}

}  // namespace

KroneckerRep rep_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q")) {
    throw std::invalid_argument("representation must be an object with p, q, A, B");
  }
  if (!j["p"].is_number_unsigned() || !j["q"].is_number_unsigned()) {
    throw std::invalid_argument("p and q must be nonnegative integers");
  }
  const auto p = j["p"].get<std::size_t>();
  const auto q = j["q"].get<std::size_t>();
  const FieldTag field = j.contains("field") ? FieldTag::parse(j["field"].get<std::string>()) : FieldTag::rationals();
  const Json empty = Json::array();
  const Json& ja = j.contains("A") ? j["A"] : empty;
  const Json& jb = j.contains("B") ? j["B"] : empty;
  QMatrix A = (p == 0 && !j.contains("A")) ? QMatrix::zeros(RationalField{}, 0, q) : matrix_from_json(ja, p, q, "A");
  QMatrix B = (p == 0 && !j.contains("B")) ? QMatrix::zeros(RationalField{}, 0, q) : matrix_from_json(jb, p, q, "B");
  return make_rep(field, p, q, std::move(A), std::move(B));
}

}  // namespace invstab
