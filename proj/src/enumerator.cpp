#include "sfsurg/enumerator.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sfsurg/surgery.hpp"

namespace sfsurg {

namespace {

using Key = std::string;

std::vector<std::pair<Integer, Integer>> tangle_data(const MontesinosLink& normal) {
  std::vector<std::pair<Integer, Integer>> data;
  for (const auto& t : normal.tangles()) data.emplace_back(t.den(), t.num());
  return data;
}

// Smallest arrangement of the normal form under rotation and reversal,
// serialized with the twist term.
Key oriented_key(const MontesinosLink& k) {
  const MontesinosLink normal = k.normal_form();
  const auto data = tangle_data(normal);
  const std::size_t n = data.size();
  std::vector<std::pair<Integer, Integer>> best;
  for (std::size_t shift = 0; shift < n; ++shift) {
    std::vector<std::pair<Integer, Integer>> forward, backward;
    for (std::size_t i = 0; i < n; ++i) {
      forward.push_back(data[(shift + i) % n]);
      backward.push_back(data[(shift + n - i) % n]);
    }
    if (best.empty() || forward < best) best = forward;
    if (backward < best) best = backward;
  }
  std::ostringstream os;
  for (const auto& [alpha, beta] : best) os << beta << "/" << alpha << ",";
  os << ";" << normal.extra_twists();
  return os.str();
}

// Identifies a knot up to rotation, reversal and mirror image.
Key canonical_key(const MontesinosLink& k) {
  return std::min(oriented_key(k), oriented_key(mirror(k)));
}

// max |a n + b| over the 1/n fillings within distance 8 of `center`.
Integer twist_bound(const Slope& center, const Integer& a, const Integer& b) {
  Integer best = 0;
  for (const auto& n : eight_theorem_range(center)) best = std::max(best, Integer(abs(a * n + b)));
  return best;
}

// Torus-knot pretzels among the generated candidates.
bool is_known_nonhyperbolic(const Key& key) {
  static const std::set<Key> table = {
      canonical_key(pretzel({-2, 3, 3})),  // (3,4) torus knot
      canonical_key(pretzel({-2, 3, 5})),  // (3,5) torus knot
  };
  return table.contains(key);
}

class FamilyBuilder {
 public:
  explicit FamilyBuilder(CandidateFamily& family) : family_(family) {}

  void add(const MontesinosLink& k) {
    if (!is_knot(k)) return;
    Key key = canonical_key(k);
    if (!seen_.insert(key).second) return;
    family_.knots.push_back({k, is_known_nonhyperbolic(key)});
  }

 private:
  CandidateFamily& family_;
  std::set<Key> seen_;
};

const std::set<Key>& nonintegral_exemptions() {
  static const std::set<Key> keys = [] {
    std::set<Key> out;
    const long long bound = case1_q3_bound().convert_to<long long>();
    for (long long p2 = 3; p2 <= bound; ++p2) {
      for (long long p3 = p2; p3 <= bound; ++p3) {
        MontesinosLink k = pretzel({-2, p2, p3});
        if (is_knot(k)) out.insert(canonical_key(k));
      }
    }
    for (long long n = 2; n <= 8; ++n) out.insert(canonical_key(pretzel({3, 3, 2 * n}, -1)));
    out.insert(canonical_key(pretzel({3, 4, 5}, -1)));
    return out;
  }();
  return keys;
}

// (-3, 3, q) with q odd: genus one, so only |p| <= 3 can be exceptional.
bool is_minus_three_three_pretzel(const MontesinosLink& k) {
  if (k.length() != 3) return false;
  const Key key = canonical_key(k);
  for (const auto& t : k.tangles()) {
    if (t.den() % 2 == 0) continue;
    for (const Integer& q : {Integer(t.den()), Integer(-t.den())}) {
      if (canonical_key(pretzel({-3, 3, q})) == key) return true;
    }
  }
  return false;
}

}  // namespace

bool SlopeConstraint::admits(const Slope& r) const {
  if (integral_only && !r.is_integral()) return false;
  if (max_abs_numerator && abs(r.p()) > *max_abs_numerator) return false;
  return true;
}

std::string SlopeConstraint::to_string() const {
  if (!integral_only && !max_abs_numerator) return "all slopes";
  std::string out = integral_only ? "integral only" : "";
  if (max_abs_numerator) {
    out += (out.empty() ? "" : ", ") + std::string("|p| <= ") + max_abs_numerator->str();
  }
  return out;
}

SlopeConstraint conjoin(const SlopeConstraint& a, const SlopeConstraint& b) {
  SlopeConstraint out;
  out.integral_only = a.integral_only || b.integral_only;
  out.max_abs_numerator = a.max_abs_numerator;
  if (b.max_abs_numerator && (!out.max_abs_numerator || *b.max_abs_numerator < *out.max_abs_numerator)) {
    out.max_abs_numerator = b.max_abs_numerator;
  }
  return out;
}

Integer case1_q3_bound() { return twist_bound(Slope::meridian(), -2, 1); }

CandidateFamily enumerate_case1() {
  CandidateFamily family;
  family.case_label = 1;
  family.description = "(q1, q2, q3) pretzel, |q1| <= |q2| <= |q3| <= 17, |q1| = 2 or |q1| = |q2| = 3";

  // |q1| = 2: K(-1/2, 1/q2, 1/(1-2n)) with the twisted circle filled by 1/n.
  const Integer bound_two = case1_q3_bound();
  // |q1| = |q2| = 3: q3 = 2n+1 twists around the trefoil at n = -1, and
  // q3 = 2n around the connected sum of two trefoils at n = 0.
  const Integer bound_three_odd = twist_bound(Slope(-1, 1), 2, 1);
  const Integer bound_three_even = twist_bound(Slope::meridian(), 2, 0);
  if (std::max(bound_three_odd, bound_three_even) > bound_two) {
    throw std::logic_error("case 1 bounds are inconsistent");
  }

  FamilyBuilder builder(family);
  const long long top = bound_two.convert_to<long long>();
  for (long long q1 : {-2, 2}) {
    for (long long a2 = 2; a2 <= top; ++a2) {
      for (long long a3 = a2; a3 <= top; ++a3) {
        for (long long s2 : {1, -1}) {
          for (long long s3 : {1, -1}) builder.add(pretzel({q1, s2 * a2, s3 * a3}));
        }
      }
    }
  }
  for (long long q1 : {-3, 3}) {
    for (long long q2 : {3, -3}) {
      for (long long a3 = 3; a3 <= top; ++a3) {
        const Integer& limit = a3 % 2 ? bound_three_odd : bound_three_even;
        if (a3 > limit) continue;
        for (long long s3 : {1, -1}) builder.add(pretzel({q1, q2, s3 * a3}));
      }
    }
  }
  return family;
}

CandidateFamily enumerate_case2() {
  CandidateFamily family;
  family.case_label = 2;
  family.description = "(3, 3, 2n, -1) pretzel, 2 <= n <= 8";
  FamilyBuilder builder(family);
  // q3 = 2n >= 3 and even (a knot), so n >= 2.
  for (const auto& n : eight_theorem_range(Slope::meridian())) {
    if (n >= 2) builder.add(pretzel({3, 3, 2 * n}, -1));
  }
  return family;
}

CandidateFamily enumerate_case3(int cap) {
  if (cap < 1) {
    throw std::invalid_argument("case 3 cap must be at least 1");
  }
  CandidateFamily family;
  family.case_label = 3;
  family.description = "K(-1/2, 2/5, 1/(2n+1)), 1 <= n <= " + std::to_string(cap) +
                       " (bound conjectural)";
  family.conjectural = true;
  FamilyBuilder builder(family);
  for (int n = 1; n <= cap; ++n) {
    builder.add(MontesinosLink({{-1, 2}, {2, 5}, {1, 2 * n + 1}}));
  }
  return family;
}

CandidateFamily enumerate_case4() {
  CandidateFamily family;
  family.case_label = 4;
  family.description = "ten individual knots";
  FamilyBuilder builder(family);
  for (long long q2 : {4, -4}) {
    for (long long q3 : {5, -5}) builder.add(pretzel({3, q2, q3}));
  }
  builder.add(pretzel({3, 4, 5}, -1));
  builder.add(MontesinosLink({{-2, 3}, {1, 3}, {2, 5}}));
  for (int a = 3; a <= 6; ++a) builder.add(MontesinosLink({{-1, 2}, {1, 3}, {2, 2 * a + 1}}));
  return family;
}

SlopeConstraint nonintegral_slope_filter(const MontesinosLink& k) {
  SlopeConstraint constraint;
  constraint.integral_only = !nonintegral_exemptions().contains(canonical_key(k));
  if (is_minus_three_three_pretzel(k)) {
    SlopeConstraint genus_one;
    genus_one.integral_only = true;
    genus_one.max_abs_numerator = 3;
    constraint = conjoin(constraint, genus_one);
  }
  return constraint;
}

std::vector<CandidateEntry> full_candidate_list(int cap3) {
  const CandidateFamily cases[] = {enumerate_case1(), enumerate_case2(), enumerate_case3(cap3),
                                   enumerate_case4()};
  std::vector<CandidateEntry> out;
  std::set<Key> seen;
  for (const auto& family : cases) {
    for (const auto& c : family.knots) {
      if (!seen.insert(canonical_key(c.knot)).second) continue;
      out.push_back({c.knot, nonintegral_slope_filter(c.knot), family.case_label, c.nonhyperbolic,
                     family.conjectural});
    }
  }
  return out;
}

}  // namespace sfsurg
