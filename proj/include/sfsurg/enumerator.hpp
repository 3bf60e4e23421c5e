#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfsurg/slope.hpp"
#include "sfsurg/tangle.hpp"

namespace sfsurg {

// Which slopes on a knot may still give a small Seifert fibered surgery.
// Constraints compose by conjunction.
struct SlopeConstraint {
  bool integral_only = false;
  std::optional<Integer> max_abs_numerator;

  static SlopeConstraint all_slopes() { return {}; }

  bool admits(const Slope& r) const;
  std::string to_string() const;

  friend bool operator==(const SlopeConstraint&, const SlopeConstraint&) = default;
};

SlopeConstraint conjoin(const SlopeConstraint& a, const SlopeConstraint& b);

struct Candidate {
  MontesinosLink knot;
  // Known torus knot or otherwise non-hyperbolic; kept in the list.
  bool nonhyperbolic = false;
};

// One of the four candidate classes for length-3 Montesinos knots with
// small Seifert fibered surgeries (besides the 4n+6 / 4n+7 families).
struct CandidateFamily {
  int case_label = 0;
  std::string description;
  // The member list rests on a bound that is only conjectured.
  bool conjectural = false;
  std::vector<Candidate> knots;
};

// Largest |q3| allowed in case 1, derived from the 1/n twisting ranges:
// |1 - 2n| over eight_theorem_range(1/0) for |q1| = 2, and the analogous
// odd/even bounds for |q1| = |q2| = 3. All three must agree on 17.
Integer case1_q3_bound();

// (q1, q2, q3) pretzel knots with |q1| <= |q2| <= |q3| <= bound and either
// |q1| = 2 or |q1| = |q2| = 3, over all signs, up to equivalence.
CandidateFamily enumerate_case1();

// (3, 3, 2n, -1) pretzel knots; n ranges over the 1/n twists within
// distance 8 of the connected-sum filling n = 0, intersected with n >= 2.
CandidateFamily enumerate_case2();

// K(-1/2, 2/5, 1/(2n+1)) for n = 1..cap. Throws std::invalid_argument if
// cap < 1.
CandidateFamily enumerate_case3(int cap = 9);

// The ten individual knots.
CandidateFamily enumerate_case4();

// Slopes that survive the non-integral filter (plus the genus-one bound
// |p| <= 3 on (-3, 3, q) pretzels).
SlopeConstraint nonintegral_slope_filter(const MontesinosLink& k);

struct CandidateEntry {
  MontesinosLink knot;
  SlopeConstraint constraint;
  int case_label = 0;
  bool nonhyperbolic = false;
  bool conjectural = false;
};

// Union of the four cases in case order, duplicates (up to equivalence)
// dropped after their first occurrence. Throws std::invalid_argument if
// cap3 < 1.
std::vector<CandidateEntry> full_candidate_list(int cap3 = 9);

}  // namespace sfsurg
