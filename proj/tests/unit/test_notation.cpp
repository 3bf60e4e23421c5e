#include <doctest.h>

#include "sfsurg/catalog.hpp"
#include "sfsurg/notation.hpp"
#include "sfsurg/symbolic.hpp"

using namespace sfsurg;

TEST_SUITE("notation") {
  TEST_CASE("knots") {
    CHECK(parse_knot("K(-1/2, 1/3, 1/7)") == pretzel({-2, 3, 7}));
    CHECK(parse_knot("P(3,3,4;-1)") == pretzel({3, 3, 4}, -1));
    CHECK(parse_knot("  K ( 2/5 ,-1/2 ; 3 ) ") == MontesinosLink({{2, 5}, {-1, 2}}, 3));
    CHECK(parse_knot("K(1/2, 1/2)") == pretzel({2, 2}));
  }

  TEST_CASE("malformed knots") {
    CHECK_THROWS_AS(parse_knot("K(1/0, 1/2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_knot("K(1/2, 1/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_knot("Q(1/2)"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_knot("K(1/2, a/3)"), doctest::Contains("a/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_knot("P(1, 3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_knot("K()"), std::invalid_argument);
  }

  TEST_CASE("seifert spaces") {
    SeifertInvariants m = parse_sfs("M(-1/2,1/3,-2/5)");
    CHECK(m.b() == 0);
    CHECK(m.fibers().size() == 3);
    SeifertInvariants n = parse_sfs("M(-2; 1/2, 2/3, 13/15)");
    CHECK(n.b() == -2);
    CHECK(parse_sfs(n.to_string()) == n);
    CHECK(parse_sfs("M()").fibers().empty());
    CHECK_THROWS_AS(parse_sfs("M(1/0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sfs("M(1/2; 1/3)"), std::invalid_argument);
  }

  TEST_CASE("pretzel display") {
    CHECK(format_pretzel(pretzel({3, 3, 4}, -1)) == "P(3, 3, 4; -1)");
    CHECK(format_pretzel(MontesinosLink({{-2, 3}, {1, 3}, {2, 5}})) == "K(-2/3, 1/3, 2/5; 0)");
  }

  TEST_CASE("round trip over the shipped catalog") {
    for (const auto& row : default_catalog().rows) {
      const MontesinosLink k = row.knot_at(row.is_family() ? Integer(3) : Integer(0));
      CHECK(parse_knot(k.to_string()) == k);
      CHECK(equivalent(parse_knot(format_pretzel(k)), k) == Chirality::kDirect);
      const SeifertInvariants m = row.claimed_at(row.is_family() ? Integer(3) : Integer(0));
      CHECK(parse_sfs(m.to_string()) == m);
    }
  }

  TEST_CASE("symbolic fractions") {
    SymbolicFraction f = parse_symbolic_fraction("2/(2n-5)", "n");
    CHECK(f.evaluate(3) == ExtendedRational(2));
    CHECK(f.evaluate(4) == ExtendedRational(2, 3));
    CHECK(f.to_string("n") == "2/(2n-5)");
    SymbolicFraction g = parse_symbolic_fraction("1/(n-2)", "n");
    CHECK(g.evaluate(2).is_infinite());
    CHECK(parse_symbolic_fraction("-n/1", "n").to_string("n") == "(-n)/1");
    CHECK(parse_symbolic_fraction("(4n+6)", "n").evaluate(-2) == ExtendedRational(-2));
    CHECK_THROWS_AS(parse_symbolic_fraction("2/(2m-5)", "n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_symbolic_fraction("n", ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_symbolic_fraction("n/(n)", "n").evaluate(0), std::invalid_argument);
  }
}
