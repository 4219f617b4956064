#include <algorithm>

#include <stdexcept>

#include "doctest.h"
#include "invstab/hearts.hpp"

using namespace invstab;

namespace {

std::vector<KClass> sorted_classes(const Heart& h) {
  std::vector<KClass> v;
  for (const auto& s : h.simples) v.push_back(s.kclass);
  std::sort(v.begin(), v.end());
  return v;
}

// Classes of L_{i+2} L_i (left) or R_{i+2} R_i (right) from the standard
// quiver alone: tilts at the non-adjacent slots i, i+2 commute, so each
// simple picks up ext copies of both tilted simples.
std::vector<KClass> double_tilt_oracle(int i, bool left) {
  const int arrows[4][4] = {{0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}, {2, 0, 0, 0}};
  std::vector<KClass> out;
  for (int j = 0; j < 4; ++j) {
    if (j == i || j == i + 2) {
      out.push_back(-gamma(j));
      continue;
    }
    KClass c = gamma(j);
    for (int s : {i, i + 2}) c = c + (left ? arrows[s][j] : arrows[j][s]) * gamma(s);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<KClass> word_classes(Generator g) {
  std::vector<KClass> v;
  for (int j = 0; j < 4; ++j) v.push_back(apply(generator_matrix(g), gamma(j)));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("labels") {
  CHECK(Label::line(0, 0).str() == "s*O(0,0)");
  CHECK(Label::line(-1, 0, 1).str() == "s*O(-1,0)[1]");
  CHECK(Label::line(1, -1, 1, 1).str() == "Psi(s*O(1,-1)[1])");
  CHECK(Label::fiber(false).str() == "s*O_fiber(x)");
  CHECK(Label::fiber(true, 1).str() == "s*O_fiber(x)(-1)[1]");
  for (const std::string s : {"s*O(0,0)", "s*O(-3,2)[2]", "Psi(s*O(1,0))", "s*O_fiber(x)(-1)[1]", "cone(X -> Y)",
                              "T_Psi(s*O(-1,0))"}) {
    CHECK(parse_label(s).str() == s);
  }
  CHECK_THROWS(parse_label("O(1,1)"));
  CHECK(Label::line(2, 0).shifted(-1).str() == "s*O(2,0)[-1]");
}

TEST_CASE("Kronecker type labels follow the table") {
  for (int l = 0; l <= 4; ++l) {
    CHECK(kron_type_label(KClass{{l + 1, l, 0, 0}})->str() == Label::line(l, 0).str());
    CHECK(kron_type_label(KClass{{0, 0, l + 1, l}})->str() == Label::line(l + 1, -1, 1).str());
    CHECK(kron_type_label(KClass{{l, l + 1, 0, 0}})->str() == Label::line(-l - 1, 0, 1).str());
    CHECK(kron_type_label(KClass{{0, 0, l, l + 1}})->str() == Label::line(-l, -1, 2).str());
    if (l == 0) continue;  // simple classes read as type I
    // type II: Psi of the type I object with the rotated class
    CHECK(kron_type_label(KClass{{0, l + 1, l, 0}})->str() == "Psi(" + Label::line(l, 0).str() + ")");
    CHECK(kron_type_label(KClass{{l, 0, 0, l + 1}})->str() == "Psi(" + Label::line(l + 1, -1, 1).str() + ")");
    CHECK(kron_type_label(KClass{{0, l, l + 1, 0}})->str() == "Psi(" + Label::line(-l - 1, 0, 1).str() + ")");
    CHECK(kron_type_label(KClass{{l + 1, 0, 0, l}})->str() == "Psi(" + Label::line(-l, -1, 2).str() + ")");
  }
  CHECK(kron_type_label(KClass{{1, 1, 0, 0}})->str() == "s*O_fiber(x)");
  CHECK(kron_type_label(KClass{{0, 0, 1, 1}})->str() == "s*O_fiber(x)(-1)[1]");
  CHECK_FALSE(kron_type_label(KClass{{1, 0, 1, 0}}));
  CHECK_FALSE(kron_type_label(KClass{{3, 1, 0, 0}}));
}

TEST_CASE("standard heart") {
  const Heart h = standard_heart();
  CHECK(h.simples[1].label.str() == "s*O(-1,0)[1]");
  CHECK(h.simples[3].label.str() == "s*O(0,-1)[2]");
  CHECK(ext_fully_known(h.ext));
  CHECK(h.class_determinant() == 1);
  for (int j = 0; j < 4; ++j) CHECK(h.simples[j].kclass == gamma(j));
}

TEST_CASE("simple tilts") {
  const Heart h = standard_heart();
  const Heart l0 = simple_tilt(h, 0, TiltDirection::left);
  CHECK(l0.simples[0].kclass == -gamma(0));
  CHECK(l0.simples[1].kclass == gamma(1) + 2 * gamma(0));
  CHECK(l0.simples[1].label.str() == "s*O(1,0)");
  CHECK(l0.simples[2].kclass == gamma(2));
  CHECK(*l0.ext[1][0] == 2);
  CHECK_FALSE(ext_fully_known(l0.ext));
  const Heart r0 = simple_tilt(h, 0, TiltDirection::right);
  CHECK(r0.simples[3].kclass == gamma(3) + 2 * gamma(0));
  CHECK(r0.simples[0].label.str() == "s*O(0,0)[-1]");
  // A second tilt needs Ext entries that a single tilt leaves undetermined.
  CHECK_THROWS_AS(simple_tilt(l0, 1, TiltDirection::left), std::domain_error);
  CHECK_THROWS(simple_tilt(h, 4, TiltDirection::left));
  CHECK(parse_direction("right") == TiltDirection::right);
  CHECK_THROWS(parse_direction("up"));
}

TEST_CASE("double tilts against the quiver oracle and the generator matrices") {
  struct Case {
    int slot;
    bool left;
    Generator g;
  };
  for (const Case c : {Case{0, true, Generator::T}, Case{1, false, Generator::T_inv}, Case{1, true, Generator::T_psi},
                       Case{0, false, Generator::T_psi_inv}}) {
    const Heart d = double_tilt(standard_heart(), c.slot, c.left ? TiltDirection::left : TiltDirection::right);
    CHECK(sorted_classes(d) == double_tilt_oracle(c.slot, c.left));
    CHECK(sorted_classes(d) == word_classes(c.g));
    CHECK(heart_equal_kclasses(d, heart_of_word(TiltWord::reduced({c.g}))));
    CHECK(ext_fully_known(d.ext));
    CHECK(d.class_determinant() == 1);
  }
}

TEST_CASE("double tilts can be iterated") {
  Heart h = standard_heart();
  TiltWord w;
  // After k steps T^k(S0), T^k(S2) sit in the slots of parity k.
  for (int k = 0; k < 3; ++k) {
    h = double_tilt(h, k % 2, TiltDirection::left);
    w = w.append(Generator::T);
    CHECK(heart_equal_kclasses(h, heart_of_word(w)));
  }
  // a right tilt at the freshly shifted pair undoes the left tilt
  h = double_tilt(h, 0, TiltDirection::right);
  CHECK(heart_equal_kclasses(h, heart_of_word(TiltWord::parse("T,T"))));
  h = double_tilt(h, 0, TiltDirection::left);
  CHECK(heart_equal_kclasses(h, heart_of_word(w)));
}

TEST_CASE("tilt words") {
  const TiltWord w = TiltWord::parse("T, Tpsi, T_Psi^-1, T^-1, Tpsi^-1");
  CHECK(w.str() == "[T_Psi^-1]");
  CHECK(TiltWord::parse("[T,Tinv]").empty());
  CHECK(TiltWord::parse("").empty());
  CHECK_THROWS_AS(TiltWord::parse("T,S"), std::invalid_argument);
  const TiltWord v = TiltWord::parse("T,T_Psi,T");
  CHECK(v.inverse().str() == "[T^-1,T_Psi^-1,T^-1]");
  CHECK(v.matrix() * v.inverse().matrix() == identity_auto());
  CHECK(v.quotient_exponent() == 1);
  CHECK(TiltWord::parse("T,T,T_Psi^-1").quotient_exponent() == 3);
  for (Generator g : {Generator::T, Generator::T_inv, Generator::T_psi, Generator::T_psi_inv}) {
    CHECK(generator_matrix(g) * generator_matrix(inverse(g)) == identity_auto());
  }
  CHECK(generator_matrix(Generator::T) == t());
  CHECK(generator_matrix(Generator::T_psi) == t_psi());
}

TEST_CASE("generator action on labels") {
  CHECK(apply_generator(Generator::T, Label::line(0, 0)).str() == "s*O(1,0)");
  CHECK(apply_generator(Generator::T_inv, Label::line(-1, 0, 1)).str() == "s*O(-2,0)[1]");
  CHECK(apply_generator(Generator::T, Label::fiber(false)).str() == "s*O_fiber(x)");
  CHECK(apply_generator(Generator::T_psi, Label::line(0, 0, 0, 1)).str() == "Psi(s*O(1,0))");
}

TEST_CASE("heart of a word maps every simple through the word matrix") {
  const TiltWord w = TiltWord::parse("T,T_Psi^-1,T");
  const Heart h = heart_of_word(w);
  for (int j = 0; j < 4; ++j) CHECK(h.simples[j].kclass == apply(w.matrix(), gamma(j)));
  CHECK(h.class_determinant() == 1);
  CHECK_FALSE(heart_equal_kclasses(h, standard_heart()));
}

TEST_CASE("algebraic stability from charges on the simples") {
  const std::array<ExactComplex, 4> u_plus{ExactComplex(1, 1), ExactComplex(-1, 1), ExactComplex(1, 1),
                                           ExactComplex(-1, 1)};
  CHECK(algebraic_stability(standard_heart(), u_plus).region == "U+");
  const std::array<ExactComplex, 4> ray{ExactComplex(0, 1), ExactComplex(0, 2), ExactComplex(0, 1), ExactComplex(0, 2)};
  CHECK(algebraic_stability(standard_heart(), ray).region == "ray");
  std::array<ExactComplex, 4> broken = u_plus;
  broken[2] = ExactComplex(2, 1);
  CHECK_THROWS(algebraic_stability(standard_heart(), broken));
  std::array<ExactComplex, 4> outside = u_plus;
  outside[0] = outside[2] = ExactComplex(1, -1);
  CHECK_THROWS(algebraic_stability(standard_heart(), outside));
}
