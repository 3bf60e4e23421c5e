#include "sfsurg/report.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "embedded_data.hpp"

namespace sfsurg {

namespace {

void tally(StatusCounts& counts, AuditStatus status) {
  switch (status) {
    case AuditStatus::kPass:
      ++counts.pass;
      break;
    case AuditStatus::kMismatch:
      ++counts.mismatch;
      break;
    case AuditStatus::kDegenerate:
      ++counts.degenerate;
      break;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::set<std::string> VerificationReport::mismatch_labels() const {
  std::set<std::string> labels;
  for (const auto& e : entries) {
    if (e.status == AuditStatus::kMismatch) labels.insert(e.label());
  }
  return labels;
}

VerificationReport emit_report(std::vector<RowStatus> results) {
  std::stable_sort(results.begin(), results.end(), [](const RowStatus& a, const RowStatus& b) {
    if (a.id != b.id) return a.id < b.id;
    if (!a.parameter || !b.parameter) return !a.parameter && b.parameter;
    return *a.parameter < *b.parameter;
  });
  VerificationReport report;
  for (const auto& r : results) tally(r.parameter ? report.family : report.fixed, r.status);
  report.entries = std::move(results);
  return report;
}

VerificationReport audit_catalog(const Catalog& catalog) {
  std::vector<RowStatus> results;
  for (const auto& row : catalog.rows) {
    if (row.is_family()) {
      auto family = verify_family(row);
      results.insert(results.end(), family.begin(), family.end());
    } else {
      results.push_back(verify_row(row));
    }
  }
  return emit_report(std::move(results));
}

void write_text(std::ostream& out, const VerificationReport& report) {
  std::size_t label_width = 5;
  std::size_t knot_width = 4;
  std::size_t claimed_width = 7;
  for (const auto& e : report.entries) {
    label_width = std::max(label_width, e.label().size());
    knot_width = std::max(knot_width, e.knot.size());
    claimed_width = std::max(claimed_width, e.claimed.size());
  }
  auto row = [&](std::string_view label, std::string_view knot, std::string_view slope,
                 std::string_view claimed, std::string_view h1_surgery, std::string_view h1_claimed,
                 std::string_view status, std::string_view note) {
    std::ostringstream line;
    line << std::left << std::setw(static_cast<int>(label_width)) << label << "  "
         << std::setw(static_cast<int>(knot_width)) << knot << "  " << std::setw(7) << slope
         << "  " << std::setw(static_cast<int>(claimed_width)) << claimed << "  " << std::right
         << std::setw(8) << h1_surgery << "  " << std::setw(8) << h1_claimed << "  " << std::left
         << std::setw(10) << status << "  " << note;
    std::string text = line.str();
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  };
  row("label", "knot", "slope", "claimed", "|p|", "|H1(M)|", "status", "note");
  for (const auto& e : report.entries) {
    std::string note = e.reason;
    if (e.trick_slope) {
      note += (note.empty() ? "" : "; ") + std::string("trick tangle slope ") +
              e.trick_slope->to_string();
    }
    row(e.label(), e.knot.empty() ? "-" : e.knot, e.slope, e.claimed, e.expected.str(),
        e.computed ? e.computed->str() : "-", to_string(e.status), note);
  }
  out << '\n'
      << "fixed rows: " << report.fixed.pass << "/" << report.fixed.total() << " PASS, "
      << report.fixed.mismatch << " MISMATCH, " << report.fixed.degenerate << " DEGENERATE\n"
      << "family instances: " << report.family.pass << "/" << report.family.total() << " PASS, "
      << report.family.mismatch << " MISMATCH, " << report.family.degenerate
      << " DEGENERATE\n";
}

void write_records(std::ostream& out, const VerificationReport& report) {
  for (const auto& e : report.entries) {
    out << e.label() << '\t' << to_string(e.status) << '\t'
        << (e.computed ? e.computed->str() : "-") << '\t' << e.expected << '\n';
  }
}

std::set<std::string> parse_pinned(std::string_view text) {
  std::set<std::string> labels;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) labels.emplace(line);
  }
  return labels;
}

const std::set<std::string>& default_pinned_mismatches() {
  static const std::set<std::string> pinned = parse_pinned(embedded::pinned_mismatches_text());
  return pinned;
}

}  // namespace sfsurg
