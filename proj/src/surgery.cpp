#include "sfsurg/surgery.hpp"

#include <stdexcept>
#include <utility>

namespace sfsurg {

SurgerySpec::SurgerySpec(MontesinosLink knot, Slope slope)
    : knot_(std::move(knot)), slope_(std::move(slope)) {
  if (!is_knot(knot_)) {
    throw std::invalid_argument(knot_.to_string() + " is not a knot");
  }
}

std::string SurgerySpec::to_string() const {
  return "(" + knot_.to_string() + ", " + slope_.to_string() + ")";
}

bool mirror_equivalent(const SurgerySpec& a, const SurgerySpec& b) {
  // An amphichiral knot can match both ways, so test each independently.
  if (a.slope() == b.slope() && equivalent_directly(a.knot(), b.knot())) return true;
  return a.slope() == -b.slope() && equivalent_via_mirror(a.knot(), b.knot());
}

Slope twist_correspondence(const Slope& r2, const Integer& n, const Integer& winding) {
  if (winding < 0) {
    throw std::invalid_argument("winding number must be non-negative");
  }
  return Slope(r2.p() - n * winding * winding * r2.q(), r2.q());
}

Slope trick_tangle_slope(const Slope& r0, const Slope& r) {
  if (!r0.is_integral() || !r.is_integral()) {
    throw std::invalid_argument("trick slopes must be integral, got framing " + r0.to_string() +
                                " and slope " + r.to_string());
  }
  return Slope(r0.p() - r.p(), 1);
}

Integer surgery_h1_order(const SurgerySpec& s) { return abs(s.slope().p()); }

std::vector<Integer> eight_theorem_range(const Slope& center, FillingFamily /*family*/,
                                         const Integer& bound) {
  if (bound < 0) {
    throw std::invalid_argument("distance bound must be non-negative");
  }
  if (abs(center.p()) != 1) {
    throw std::invalid_argument("center " + center.to_string() + " is not of the form 1/m");
  }
  // center = 1/m with m = p * q; distance(1/n, 1/m) = |n - m|.
  const Integer m = center.p() * center.q();
  std::vector<Integer> out;
  for (Integer n = m - bound; n <= m + bound; ++n) {
    if (distance(Slope(1, n), center) <= bound) out.push_back(n);
  }
  return out;
}

}  // namespace sfsurg
