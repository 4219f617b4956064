#include <stdexcept>

#include "doctest.h"
#include "invstab/serialize.hpp"

using namespace invstab;

TEST_CASE("representation JSON round trip") {
  const KroneckerRep M = direct_sum(indecomposable(1, 2), indecomposable(1, 1, P1Point::finite(Rational(-3, 2))));
  const Json j = to_json(M);
  CHECK(j["field"] == "Q");
  CHECK(j["A"].size() == 2);
  CHECK(rep_from_json(j) == M);
  CHECK(rep_from_json(Json::parse(j.dump())) == M);
}

TEST_CASE("representation JSON input forms") {
  const Json j = Json::parse(R"({"p": 1, "q": 2, "A": [[1, "1/2"]], "B": [[0, -1]]})");
  const KroneckerRep M = rep_from_json(j);
  CHECK(M.field == FieldTag::rationals());
  CHECK(M.A(0, 1) == Rational(1, 2));
  CHECK(M.B(0, 1) == -1);
  CHECK_THROWS_AS(rep_from_json(Json::parse(R"({"p": 1, "q": 1, "A": [[1, 2]], "B": [[0]]})")), std::invalid_argument);
  CHECK_THROWS_AS(rep_from_json(Json::parse(R"({"p": -1, "q": 1})")), std::invalid_argument);
  CHECK_THROWS(rep_from_json(Json::parse(R"({"p": 1, "q": 1, "A": [["x"]], "B": [[0]]})")));
  CHECK_THROWS(rep_from_json(Json::parse(R"([1, 2])")));
  const KroneckerRep c1 = rep_from_json(Json::parse(R"({"p": 0, "q": 1})"));
  CHECK(c1.q == 1);
}

TEST_CASE("other records") {
  CHECK(to_json(KClass{{1, 0, -2, 3}}).dump() == "[1,0,-2,3]");
  CHECK(to_json(standard_heart())[1]["label"] == "s*O(-1,0)[1]");
  const auto blocks = kronecker_canonical_form(indecomposable(2, 1));
  const std::string want = R"j({"block":"quotient-root (2,1)","class":[2,1]})j";
  CHECK(to_json(blocks[0]).dump() == want);
  const auto hn = hn_filtration(indecomposable(0, 1), {ExactComplex(1, 1), ExactComplex(-1, 1)});
  CHECK(to_json(hn[0])["charge"] == "-1+1*i");
}
