#pragma once

// The normalized slice Z(delta) = i, parametrized by x = Z(gbar_0) with
// Z(gbar_1) = i/2 - x. The standard heart's chamber is the strip
// 0 < Im x < 1/2; the sheet of a word w with quotient exponent n is the strip
// translated to -n/2 < Im x < -n/2 + 1/2. The hyperplanes of Delta meet the
// slice at x = (n+1) i/2 for (n, n+1) and at x = -n i/2 for (n+1, n), so the
// punctures are exactly the points of (i/2) Z.

#include <optional>
#include <string>
#include <vector>

#include "invstab/charge.hpp"
#include "invstab/hearts.hpp"

namespace invstab {

struct NormalizedCharge {
  ExactComplex x;

  CentralCharge charge() const;
  /// Throws std::domain_error when Z(delta) = 0.
  static NormalizedCharge from_charge(const CentralCharge& Z);
};

bool is_puncture(const ExactComplex& x);

/// W^{sign}_index: index 0 where Z(gamma_0) is real, 1 where Z(gamma_1) is real.
struct Wall {
  int index = 0;
  int sign = 1;
  bool operator==(const Wall&) const = default;
  std::string str() const;  // "W+0"
  /// Throws std::invalid_argument for malformed text.
  static Wall parse(const std::string& text);
};

struct Region {
  enum class Kind { u_plus, u_minus, ray, wall, outside };
  Kind kind = Kind::outside;
  Wall wall;

  bool in_chamber() const { return kind == Kind::u_plus || kind == Kind::u_minus || kind == Kind::ray; }
  std::string str() const;
};

/// Region of x relative to the standard heart's chamber.
Region classify(const ExactComplex& x);

/// The unique n with Im x + n/2 in [0, 1/2).
Integer locate_strip(const ExactComplex& x);

/// x + n i/2: the coordinate of x relative to a sheet with quotient exponent n.
ExactComplex to_base_frame(const ExactComplex& x, long n);

struct ChamberPoint {
  TiltWord word;
  ExactComplex x;

  /// Region relative to the chamber of heart_of_word(word).
  Region region() const;
  /// Throws std::domain_error unless x lies in the open chamber of its sheet.
  void validate() const;
};

struct StableCatalogEntry {
  KClass kclass;
  QuotClass quot;
  Label label;
  bool family = false;  // a P1-family rather than a unique object
  int n = 0;            // index in the generating series; -1 for the families
  std::string note;
};

/// Stable objects, up to shift, at the point p, truncated at n <= n_max.
/// Throws std::domain_error if p is not in an open chamber.
std::vector<StableCatalogEntry> stable_catalog(const ChamberPoint& p, int n_max);

struct DeltaWitness {
  KClass kclass;          // delta
  ExactComplex z_delta;   // Z(delta)
  ExactComplex z_half;    // Z(gamma_0 + gamma_1) = Z(gamma_2 + gamma_3)
};

/// The class of a point sheaf is semistable of the phase of Z(gamma_0 + gamma_1).
DeltaWitness semistable_delta_witness(const ChamberPoint& p);

/// Generator appended when leaving the chamber through a wall of the base
/// frame: W+0 -> T, W-0 -> T_Psi^-1, W+1 -> T_Psi, W-1 -> T^-1.
Generator wall_generator(const Wall& w);
TiltWord wall_cross_rule(const TiltWord& word, const Wall& w);

struct Crossing {
  std::size_t segment = 0;
  Rational parameter;  // in (0, 1]
  ExactComplex point;
  Wall wall;           // in the frame of the sheet being left
  TiltWord word;       // sheet entered
};

struct LiftResult {
  ChamberPoint end;
  std::vector<Crossing> crossings;
};

/// Lifts the polygonal path through the covering, starting on the sheet of
/// start. The path is prefixed with start.x when its first waypoint differs.
/// Throws std::domain_error if the start is invalid, if the path meets a
/// puncture, runs along a wall, touches a wall without crossing, or ends on
/// a wall; std::invalid_argument for repeated consecutive waypoints.
LiftResult lift_path(const ChamberPoint& start, const std::vector<ExactComplex>& path);

/// Real slice Z(gamma_0), Z(gamma_1) in R: the lines of Delta with n <= n_max,
/// each as coefficients (c0, c1) of c0 Z(gamma_0) + c1 Z(gamma_1) = 0.
std::vector<std::pair<int, int>> arrangement_lines(int n_max);

std::string render_charge_diagram(const ChamberPoint& p, int n_max);
std::string render_arrangement(int n_max);

}  // namespace invstab
