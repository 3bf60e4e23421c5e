#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sfsurg/catalog.hpp"

namespace sfsurg {

struct StatusCounts {
  std::size_t pass = 0;
  std::size_t mismatch = 0;
  std::size_t degenerate = 0;

  std::size_t total() const { return pass + mismatch + degenerate; }
};

// Audit results in a fixed order: by row id, then by parameter value.
struct VerificationReport {
  std::vector<RowStatus> entries;
  StatusCounts fixed;   // rows without a parameter
  StatusCounts family;  // one entry per family parameter value

  std::set<std::string> mismatch_labels() const;
};

// Sorts and tallies; the result does not depend on the input order.
VerificationReport emit_report(std::vector<RowStatus> results);

// Audits every surgery row of the catalog, expanding families over their
// catalog ranges.
VerificationReport audit_catalog(const Catalog& catalog);

// Human-readable table followed by a summary.
void write_text(std::ostream& out, const VerificationReport& report);

// One line per entry: label TAB status TAB computed TAB expected, with "-"
// for an undefined computed value.
void write_records(std::ostream& out, const VerificationReport& report);

// Pinned discrepancy set: one label per line, '#' starts a comment.
std::set<std::string> parse_pinned(std::string_view text);
const std::set<std::string>& default_pinned_mismatches();

}  // namespace sfsurg
