#pragma once

#include <string>
#include <vector>

#include "lamono/arrangement.hpp"

namespace lamono {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationSummary {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Runs the identity battery on a combinatorial summary: incidence double
/// count, direction partition, multiple-point identity, the two Betti number
/// formulas, degree identity of both characteristic polynomials, root-1
/// multiplicity at infinity, zeta agreement, the unweighted closed form and
/// nonnegativity of every exponent.
///
/// Takes the summary rather than the arrangement so a corrupted summary can be
/// fed in as a negative control.
VerificationSummary verify_summary(const CombinatorialSummary& cs);

inline VerificationSummary verify_arrangement(const WeightedArrangement& arr) {
  return verify_summary(compute_combinatorics(arr));
}

}  // namespace lamono
