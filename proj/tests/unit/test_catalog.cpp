#include <doctest.h>

#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "oracles/table_oracle.hpp"
#include "sfsurg/catalog.hpp"
#include "sfsurg/report.hpp"
#include "sfsurg/surgery.hpp"

using namespace sfsurg;

namespace {

std::string read_data_file(const std::string& name) {
  std::ifstream in(std::string(SFSURG_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const char* const kRow02 =
    R"({"claimed":["-1/2","1/3","-2/5"],"extra":0,"id":"row02","knot":["-1/2","1/3","1/7"],"slope":"17/1","type":"surgery"})";

std::string with(std::string record, const std::string& from, const std::string& to) {
  record.replace(record.find(from), from.size(), to);
  return record;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("shipped catalog shape") {
    const Catalog& c = default_catalog();
    std::set<std::string> groups;
    int fixed = 0;
    for (const auto& row : c.rows) {
      groups.insert(row.id.substr(0, 5));
      if (!row.is_family()) ++fixed;
    }
    CHECK(groups.size() == 13);
    CHECK(fixed == 20);
    CHECK(c.tubed.size() == 2);
    REQUIRE(c.find_row("row03.a"));
    CHECK(c.find_row("row03.a")->framing->value == 6);
    CHECK(c.find_row("row13")->framing->value == -6);
    CHECK_FALSE(c.find_row("row02")->framing);
    CHECK(c.find_row("nope") == nullptr);
  }

  TEST_CASE("embedded copy matches the data file") {
    CHECK(default_catalog_text() == read_data_file("table.jsonl"));
    CHECK(default_pinned_mismatches() == parse_pinned(read_data_file("expected_mismatches.txt")));
  }

  TEST_CASE("byte-stable round trip") {
    const std::string text = read_data_file("table.jsonl");
    const Catalog c = load_catalog(std::string_view(text));
    CHECK(emit_catalog(c) == text);
    CHECK(emit_catalog(load_catalog(std::string_view(emit_catalog(c)))) == text);
  }

  TEST_CASE("loading edge cases") {
    CHECK(load_catalog(std::string_view("")).rows.empty());
    CHECK(load_catalog(std::string_view("\n  \n")).tubed.empty());
    CHECK(load_catalog(std::string_view(kRow02)).rows.size() == 1);

    auto line_of = [](const std::string& text) {
      try {
        load_catalog(std::string_view(text));
      } catch (const CatalogError& e) {
        return std::make_pair(e.line(), e.field());
      }
      return std::make_pair(std::size_t{0}, std::string());
    };
    CHECK(line_of(with(kRow02, "\"17/1\"", "\"1/0\"")) == std::make_pair(std::size_t{1}, std::string("slope")));
    CHECK(line_of(std::string(kRow02) + "\n" + kRow02).first == 2);
    CHECK(line_of(with(kRow02, "\"extra\"", "\"extras\"")).second == "extras");
    CHECK(line_of(with(kRow02, "\"1/7\"", "\"1/8\"")).second == "knot");
    CHECK(line_of(with(kRow02, "\"-2/5\"", "\"-2/x\"")).second == "claimed");
    CHECK(line_of("[1,2]").second == "<record>");
    CHECK(line_of("{").second == "<record>");
    CHECK(line_of(with(kRow02, "surgery", "other")).second == "type");
    CHECK_THROWS_AS(load_catalog_file("/nonexistent/table.jsonl"), std::runtime_error);
  }

  TEST_CASE("family instantiation") {
    const CatalogRow& row = *default_catalog().find_row("row01.a");
    CHECK(row.parameter_name() == "n");
    CHECK(row.knot_at(-3) == pretzel({-2, 3, -5}));
    CHECK(row.slope_at(-3) == Slope(-6));
    CHECK(row.knot_at(0) == MontesinosLink({{-1, 2}, {1, 3}}, 1));
    CHECK(row.knot_at(-1) == MontesinosLink({{-1, 2}, {1, 3}}, -1));
    CHECK_THROWS_AS(default_catalog().find_row("row01.b")->claimed_at(2), std::invalid_argument);
  }

  TEST_CASE("row audit examples") {
    const Catalog& c = default_catalog();
    RowStatus r2 = verify_row(*c.find_row("row02"));
    CHECK(r2.status == AuditStatus::kPass);
    CHECK(*r2.computed == 17);
    CHECK(r2.expected == 17);
    RowStatus r13 = verify_row(*c.find_row("row13"));
    CHECK(r13.status == AuditStatus::kPass);
    CHECK(r13.expected == 5);
    CHECK(r13.trick_slope == Slope(-1));
    RowStatus r4 = verify_row(*c.find_row("row04.a"));
    CHECK(r4.status == AuditStatus::kMismatch);
    CHECK(*r4.computed == 8);
    CHECK(r4.expected == 7);
    CHECK(verify_row(*c.find_row("row03.a")).trick_slope == Slope(3));
    CHECK_THROWS_AS(verify_row(*c.find_row("row01.a")), std::invalid_argument);
  }

  TEST_CASE("family audits") {
    const Catalog& c = default_catalog();
    for (const auto& s : verify_family(*c.find_row("row01.a"))) CHECK(s.status == AuditStatus::kPass);
    const auto b = verify_family(*c.find_row("row01.b"));
    CHECK(b.size() == 101);
    for (const auto& s : b) {
      if (*s.parameter == 2) {
        CHECK(s.status == AuditStatus::kDegenerate);
        CHECK_FALSE(s.computed);
      } else {
        CHECK(s.status == AuditStatus::kPass);
      }
    }
    const auto three = verify_family(*c.find_row("row01.b"), 3, 3);
    REQUIRE(three.size() == 1);
    CHECK(*three[0].computed == 19);
  }

  TEST_CASE("audit agrees with the independent rational oracle") {
    const Catalog& c = default_catalog();
    std::set<std::string> oracle_mismatches;
    for (const auto& entry : oracle::surgery_list()) {
      const CatalogRow* row = c.find_row(entry.id);
      REQUIRE(row);
      const Integer expected = abs(Integer(entry.slope));
      const Integer computed = oracle::rational_order(entry.fibers);
      if (computed != expected) oracle_mismatches.insert(entry.id);
      const RowStatus status = verify_row(*row);
      CHECK(*status.computed == computed);
      CHECK(status.expected == expected);
      CHECK(row->slope_at() == Slope(entry.slope));
    }
    CHECK(oracle_mismatches == default_pinned_mismatches());
    CHECK(audit_catalog(c).mismatch_labels() == oracle_mismatches);
  }

  TEST_CASE("passing rows agree across the two code paths") {
    for (const auto& row : default_catalog().rows) {
      if (row.is_family()) continue;
      const RowStatus s = verify_row(row);
      if (s.status != AuditStatus::kPass) continue;
      CHECK(surgery_h1_order(SurgerySpec(row.knot_at(), row.slope_at())) == h1_order(row.claimed_at()));
    }
  }

  TEST_CASE("tubed lookup") {
    const Catalog& c = default_catalog();
    auto outcomes = tubed_exceptional_lookup(c, TubedKnot(1, {-1, 2}, {1, 3}));
    REQUIRE(outcomes.size() == 3);
    CHECK(outcomes[0] == TubedOutcome{{Slope(6)}, SurgeryOutcome::kToroidal});
    CHECK(outcomes[1] == TubedOutcome{{Slope(7)}, SurgeryOutcome::kSmallSeifert});
    CHECK(outcomes[2] == TubedOutcome{{Slope(8)}, SurgeryOutcome::kToroidal});

    auto mirrored = tubed_exceptional_lookup(c, TubedKnot(1, {1, 2}, {-1, 3}));
    REQUIRE(mirrored.size() == 3);
    CHECK(mirrored[1].slope == SlopeDescriptor{Slope(-7)});

    auto pattern = tubed_exceptional_lookup(c, TubedKnot(0, {1, 3}, {1, 3}));
    REQUIRE(pattern.size() == 1);
    CHECK(pattern[0].slope.is_pretzel_slope());
    CHECK(pattern[0].slope.to_string() == "pretzel");
    CHECK(pattern[0].outcome == SurgeryOutcome::kToroidal);

    CHECK(tubed_exceptional_lookup(c, TubedKnot(1, {-1, 2}, {2, 5})).empty());
  }

  TEST_CASE("report") {
    const VerificationReport report = audit_catalog(default_catalog());
    CHECK(report.fixed.pass == 15);
    CHECK(report.fixed.mismatch == 5);
    CHECK(report.family.pass == 201);
    CHECK(report.family.degenerate == 1);

    std::vector<RowStatus> shuffled = report.entries;
    std::reverse(shuffled.begin(), shuffled.end());
    std::ostringstream a, b;
    write_records(a, report);
    write_records(b, emit_report(shuffled));
    CHECK(a.str() == b.str());
    CHECK(a.str().find("row04.a\tMISMATCH\t8\t7\n") != std::string::npos);
    CHECK(a.str().find("row01.b[n=2]\tDEGENERATE\t-\t15\n") != std::string::npos);

    std::ostringstream text;
    write_text(text, report);
    CHECK(text.str().find("fixed rows: 15/20 PASS") != std::string::npos);

    std::vector<RowStatus> all_pass;
    for (const auto& e : report.entries) {
      if (!e.parameter && e.status == AuditStatus::kPass) all_pass.push_back(e);
    }
    std::ostringstream summary;
    write_text(summary, emit_report(all_pass));
    CHECK(summary.str().find("15/15 PASS") != std::string::npos);
  }

  TEST_CASE("pinned set parsing") {
    CHECK(parse_pinned("# c\nrow04.a\n\n  row07.c  # trailing\n") == std::set<std::string>{"row04.a", "row07.c"});
    CHECK(parse_pinned("").empty());
  }
}
