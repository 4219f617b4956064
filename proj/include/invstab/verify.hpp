#pragma once

#include <string>
#include <vector>

namespace invstab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Replays the structural identities: lattice matrices, the quotient action,
/// delta-fixedness, the four double-tilt identities, the derived quiver, the
/// tilting vanishing, the Kronecker classification over F5, the support
/// constant of (1, i), the t-action lift, and monodromy around x = 0.
std::vector<CheckResult> run_identity_suite();

}  // namespace invstab
