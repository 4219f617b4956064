#include "invstab/verify.hpp"

#include <functional>
#include <stdexcept>

#include "invstab/chambers.hpp"
#include "invstab/geometry_oracle.hpp"
#include "invstab/hearts.hpp"
#include "invstab/kronecker.hpp"

namespace invstab {

namespace {

CheckResult run(const std::string& name, const std::function<std::string()>& body) {
  try {
    const std::string failure = body();
    return CheckResult{name, failure.empty(), failure.empty() ? "ok" : failure};
  } catch (const std::exception& e) {
    return CheckResult{name, false, std::string("exception: ") + e.what()};
  }
}

std::string matrix_identities() {
  if (t().det() != 1 || t_psi().det() != 1) return "det(t) or det(t_psi) differs from 1";
  if (psi().det() != -1 || phi().det() != 1) return "det(psi) or det(phi) has the wrong sign";
  if (!(t_psi() == psi() * t() * psi().inverse())) return "t_psi != psi t psi^-1";
  return "";
}

std::string quotient_inverse() {
  if (mul(quotient_action(t()), quotient_action(t_psi())) != identity2()) return "t|K0bar * t_psi|K0bar != I";
  return "";
}

std::string delta_fixed() {
  for (const LatticeAuto& a : {t(), t_psi(), psi()}) {
    if (!(apply(a, delta()) == delta())) return a.name + " moves delta";
  }
  return "";
}

std::string double_tilts() {
  const Heart a = standard_heart();
  struct Case {
    int slot;
    TiltDirection dir;
    Generator g;
  };
  const Case cases[] = {{0, TiltDirection::left, Generator::T},
                        {1, TiltDirection::right, Generator::T_inv},
                        {1, TiltDirection::left, Generator::T_psi},
                        {0, TiltDirection::right, Generator::T_psi_inv}};
  for (const Case& c : cases) {
    const Heart tilted = double_tilt(a, c.slot, c.dir);
    if (!heart_equal_kclasses(tilted, heart_of_word(TiltWord::reduced({c.g})))) {
      return "double tilt at {" + std::to_string(c.slot) + "," + std::to_string(c.slot + 2) + "} differs from " +
             generator_name(c.g) + "(A)";
    }
  }
  return "";
}

std::string quiver() {
  if (derive_quiver() != standard_quiver()) return "derived quiver differs from the 4-cycle with double arrows";
  if (ext_f0(DualObject({1, -1}), DualObject({-1, 0}), 1) != 2) return "H^1(O(-2,1)) is not 2-dimensional";
  return "";
}

std::string tilting_vanishing() {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 1; k <= 3; ++k) {
        if (ext_X_pullback(i, j, k) != 0) {
          return "Ext^" + std::to_string(k) + "(E" + std::to_string(i) + ", E" + std::to_string(j) + ") != 0";
        }
      }
    }
  }
  return "";
}

std::string kronecker_replay() {
  const FieldTag f5 = FieldTag::fp(5);
  const StabilityFunctionK2 case1{ExactComplex(1, 1), ExactComplex(-1, 1)};
  const StabilityFunctionK2 case2{ExactComplex(-1, 1), ExactComplex(1, 1)};
  std::vector<std::pair<KroneckerRep, bool>> reps;  // (rep, is E^lambda with m > 1)
  for (std::size_t n = 0; n <= 2; ++n) {
    reps.emplace_back(indecomposable(n, n + 1, std::nullopt, f5), false);
    reps.emplace_back(indecomposable(n + 1, n, std::nullopt, f5), false);
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    for (int l = 0; l < 5; ++l) reps.emplace_back(indecomposable(m, m, P1Point::finite(l), f5), m > 1);
    reps.emplace_back(indecomposable(m, m, P1Point::infinity(), f5), m > 1);
  }
  for (const auto& [M, thick] : reps) {
    const auto v1 = semistable_bruteforce(M, case1);
    if (!v1.semistable || v1.stable == thick) return "case 1 disagrees at class (" + std::to_string(M.p) + "," + std::to_string(M.q) + ")";
    const auto v2 = semistable_bruteforce(M, case2);
    const bool simple = M.p + M.q == 1;
    if (v2.semistable != simple || v2.stable != simple) {
      return "case 2 disagrees at class (" + std::to_string(M.p) + "," + std::to_string(M.q) + ")";
    }
  }
  return "";
}

std::string support() {
  const CentralCharge Z{ExactComplex(1), ExactComplex::i_unit()};
  if (support_constant(Z) != 1) return "support constant of (1, i) is " + to_string(support_constant(Z));
  return "";
}

std::string t_lift() {
  const CentralCharge Z{ExactComplex(Rational(1, 4), Rational(1, 4)), ExactComplex(Rational(-1, 4), Rational(1, 4))};
  const LiftedGL g = t_action_lift(Z);
  const CentralCharge moved = act_lifted(Z, g);
  const CentralCharge expected = pullback(Z, quotient_action(t().inverse()));
  if (!(moved == expected)) return "Z_g differs from Z o t^-1";
  if (!(g.matrix.apply(ExactComplex(0, Rational(1, 2))) == ExactComplex(0, Rational(1, 2)))) return "g moves i/2";
  return "";
}

std::string monodromy() {
  const Rational q(1, 4);
  const ExactComplex start(q, q);
  const std::vector<ExactComplex> loop{start, ExactComplex(-q, q), ExactComplex(-q, -q), ExactComplex(q, -q), start};
  const LiftResult r = lift_path(ChamberPoint{TiltWord{}, start}, loop);
  if (r.end.word.empty()) return "loop around x = 0 lifts to a closed path";
  if (heart_equal_kclasses(heart_of_word(r.end.word), standard_heart())) return "end heart has the standard classes";
  return "";
}

}  // namespace

std::vector<CheckResult> run_identity_suite() {
  return {run("lattice matrices (det, t_psi = psi t psi^-1)", matrix_identities),
          run("quotient action: t and t_psi mutually inverse", quotient_inverse),
          run("delta fixed by t, t_psi, psi", delta_fixed),
          run("double tilts equal T, T^-1, T_Psi, T_Psi^-1 images", double_tilts),
          run("quiver re-derived from the dual collection", quiver),
          run("tilting vanishing of the pulled-back collection", tilting_vanishing),
          run("Kronecker classification over F5", kronecker_replay),
          run("support constant of (1, i) equals 1", support),
          run("t-action lift agrees with Z o t^-1", t_lift),
          run("monodromy around x = 0 is nontrivial", monodromy)};
}

}  // namespace invstab
