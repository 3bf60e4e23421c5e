#pragma once

#include <string>
#include <vector>

#include "sfsurg/slope.hpp"
#include "sfsurg/tangle.hpp"

namespace sfsurg {

// A Dehn surgery K(r) on a Montesinos knot in S^3.
class SurgerySpec {
 public:
  // Throws std::invalid_argument if `knot` has more than one component.
  SurgerySpec(MontesinosLink knot, Slope slope);

  const MontesinosLink& knot() const { return knot_; }
  const Slope& slope() const { return slope_; }

  bool is_nontrivial() const { return !slope_.is_meridian(); }

  std::string to_string() const;

 private:
  MontesinosLink knot_;
  Slope slope_;
};

// (K, r) and (K', -r) are the same surgery up to an orientation-reversing
// homeomorphism when K' is the mirror of K.
bool mirror_equivalent(const SurgerySpec& a, const SurgerySpec& b);

// Knots K_n obtained from K' by n full twists along a trivial circle K''
// that K' winds around `winding` times.
struct TwistFamily {
  std::string base;
  Integer winding = 2;
  std::string parameter = "n";
};

// Slope on K_n corresponding to slope r2 on K' under n twists: the
// numerator shifts by n * w^2 * q. Throws std::invalid_argument for a
// negative winding number.
Slope twist_correspondence(const Slope& r2, const Integer& n, const Integer& winding);

inline Slope twist_correspondence(const TwistFamily& family, const Slope& r2, const Integer& n) {
  return twist_correspondence(r2, n, family.winding);
}

// Montesinos trick: with the knot's longitude projecting to framing r0 on
// the quotient ball, r surgery is the double branched cover of the link
// whose replacement tangle has slope r0 - r. Both slopes must be integral.
Slope trick_tangle_slope(const Slope& r0, const Slope& r);

// |H1(K(p/q))| = |p|, with 0 standing for infinite homology.
Integer surgery_h1_order(const SurgerySpec& s);

enum class FillingFamily { kOneOverN };

// All n with distance(1/n, center) <= bound, for a center of the form 1/m.
// The default bound is the universal bound on the distance between two
// exceptional slopes of a hyperbolic manifold. Throws std::invalid_argument
// if the center is not 1/m or the bound is negative.
std::vector<Integer> eight_theorem_range(const Slope& center,
                                         FillingFamily family = FillingFamily::kOneOverN,
                                         const Integer& bound = 8);

}  // namespace sfsurg
