#include <doctest.h>

#include "sfsurg/catalog.hpp"
#include "sfsurg/enumerator.hpp"
#include "sfsurg/surgery.hpp"

using namespace sfsurg;

namespace {

bool contains(const CandidateFamily& f, const MontesinosLink& k) {
  for (const auto& c : f.knots) {
    if (equivalent(c.knot, k)) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("enumerator") {
  TEST_CASE("case 1 bound") {
    Integer derived = 0;
    for (const auto& n : eight_theorem_range(Slope::meridian())) derived = std::max(derived, Integer(abs(1 - 2 * n)));
    CHECK(derived == 17);
    CHECK(case1_q3_bound() == derived);
  }

  TEST_CASE("case 1") {
    const CandidateFamily f = enumerate_case1();
    CHECK(contains(f, pretzel({-2, 3, 7})));
    CHECK(contains(f, pretzel({-2, 3, 17})));
    CHECK_FALSE(contains(f, pretzel({-2, 3, 19})));
    CHECK_FALSE(contains(f, pretzel({2, 4, 5})));
    CHECK(contains(f, pretzel({-3, 3, 5})));
    CHECK(contains(f, pretzel({3, 3, -4})));
    CHECK(contains(f, pretzel({3, 3, 16})));
    CHECK_FALSE(contains(f, pretzel({3, 3, 18})));
    CHECK_FALSE(f.conjectural);
    int flagged = 0;
    for (const auto& c : f.knots) {
      REQUIRE(is_knot(c.knot));
      if (c.nonhyperbolic) {
        ++flagged;
        CHECK((equivalent(c.knot, pretzel({-2, 3, 3})) || equivalent(c.knot, pretzel({-2, 3, 5}))));
      }
    }
    CHECK(flagged == 2);
  }

  TEST_CASE("case 2") {
    const CandidateFamily f = enumerate_case2();
    CHECK(f.knots.size() == 7);
    CHECK(contains(f, pretzel({3, 3, 4}, -1)));
    CHECK(contains(f, pretzel({3, 3, 16}, -1)));
    CHECK_FALSE(contains(f, MontesinosLink({{1, 3}, {1, 3}, {1, 2}}, -1)));
  }

  TEST_CASE("case 3") {
    const CandidateFamily f = enumerate_case3();
    CHECK(f.knots.size() == 9);
    CHECK(f.conjectural);
    const CandidateFamily one = enumerate_case3(1);
    REQUIRE(one.knots.size() == 1);
    CHECK(one.knots[0].knot == MontesinosLink({{-1, 2}, {2, 5}, {1, 3}}));
    for (const auto& c : f.knots) CHECK(is_knot(c.knot));
    CHECK_THROWS_AS(enumerate_case3(0), std::invalid_argument);
  }

  TEST_CASE("case 4") {
    const CandidateFamily f = enumerate_case4();
    CHECK(f.knots.size() == 10);
    CHECK(contains(f, MontesinosLink({{-2, 3}, {1, 3}, {2, 5}})));
    CHECK(contains(f, MontesinosLink({{-1, 2}, {1, 3}, {2, 13}})));
    CHECK(contains(f, pretzel({3, 4, 5}, -1)));
  }

  TEST_CASE("slope constraints") {
    CHECK(nonintegral_slope_filter(pretzel({-2, 3, 7})) == SlopeConstraint::all_slopes());
    CHECK(nonintegral_slope_filter(pretzel({3, 3, 6}, -1)) == SlopeConstraint::all_slopes());
    CHECK(nonintegral_slope_filter(pretzel({3, 4, 5}, -1)) == SlopeConstraint::all_slopes());
    SlopeConstraint integral = nonintegral_slope_filter(MontesinosLink({{-1, 2}, {1, 3}, {2, 7}}));
    CHECK(integral.integral_only);
    CHECK_FALSE(integral.max_abs_numerator);
    SlopeConstraint genus_one = nonintegral_slope_filter(pretzel({-3, 3, 7}));
    CHECK(genus_one.integral_only);
    CHECK(genus_one.max_abs_numerator == Integer(3));
    CHECK(genus_one.admits(-3));
    CHECK_FALSE(genus_one.admits(4));
    CHECK_FALSE(genus_one.admits(Slope(1, 2)));
    CHECK(nonintegral_slope_filter(mirror(pretzel({-3, 3, 7}))) == genus_one);
    CHECK(genus_one.to_string() == "integral only, |p| <= 3");
    CHECK(SlopeConstraint::all_slopes().admits(Slope(5, 3)));
  }

  TEST_CASE("conjunction") {
    SlopeConstraint a{true, std::nullopt};
    SlopeConstraint b{false, Integer(3)};
    SlopeConstraint c{false, Integer(5)};
    CHECK(conjoin(a, b) == SlopeConstraint{true, Integer(3)});
    CHECK(conjoin(b, c) == b);
    CHECK(conjoin(c, b) == b);
    CHECK(conjoin(SlopeConstraint::all_slopes(), a) == a);
  }

  TEST_CASE("full list") {
    const auto list = full_candidate_list();
    const std::size_t sum = enumerate_case1().knots.size() + 7 + 9 + 10;
    std::size_t overlaps = 0;
    for (const auto& f : {enumerate_case2(), enumerate_case3(), enumerate_case4()}) {
      for (const auto& c : f.knots) {
        bool earlier = contains(enumerate_case1(), c.knot);
        if (f.case_label > 2 && contains(enumerate_case2(), c.knot)) earlier = true;
        if (f.case_label > 3 && contains(enumerate_case3(), c.knot)) earlier = true;
        overlaps += earlier;
      }
    }
    CHECK(list.size() == sum - overlaps);
    for (std::size_t i = 0; i < list.size(); ++i) {
      REQUIRE(is_knot(list[i].knot));
      for (std::size_t j = i + 1; j < list.size(); ++j) REQUIRE_FALSE(equivalent(list[i].knot, list[j].knot));
    }
    const auto again = full_candidate_list();
    REQUIRE(again.size() == list.size());
    for (std::size_t i = 0; i < list.size(); ++i) CHECK(again[i].knot == list[i].knot);
    CHECK_THROWS_AS(full_candidate_list(0), std::invalid_argument);
  }

  TEST_CASE("catalog knots survive the sieve") {
    const auto list = full_candidate_list(9);
    for (const auto& row : default_catalog().rows) {
      if (row.is_family()) continue;
      const MontesinosLink k = row.knot_at();
      const CandidateEntry* match = nullptr;
      for (const auto& e : list) {
        if (equivalent(e.knot, k)) match = &e;
      }
      REQUIRE_MESSAGE(match, row.id);
      CHECK_MESSAGE(match->constraint.admits(row.slope_at()), row.id);
    }
  }
}
