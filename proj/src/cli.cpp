#include "sfsurg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sfsurg/catalog.hpp"
#include "sfsurg/enumerator.hpp"
#include "sfsurg/notation.hpp"
#include "sfsurg/report.hpp"
#include "sfsurg/seifert.hpp"
#include "sfsurg/surgery.hpp"

namespace sfsurg {

namespace {

enum class Format { kText, kRecords };

// Raised for anything the user typed wrong; becomes exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(std::string("cannot read ") + what + " '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string join(const std::set<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : " ") + l;
  return out.empty() ? "(none)" : out;
}

struct Options {
  Format format = Format::kText;
  std::string catalog_path;
  std::string expected_path;
  int cap = 9;
  std::string sfs;
  std::string knot;
  std::string r1, r2;
  std::string n;
  std::string winding = "2";
};

int verify_table(const Options& opt, std::ostream& out, std::ostream& err) {
  Catalog owned;
  const Catalog* catalog = &default_catalog();
  if (!opt.catalog_path.empty()) {
    const std::string text = read_file(opt.catalog_path, "catalog");
    try {
      owned = load_catalog(std::string_view(text));
    } catch (const CatalogError& e) {
      throw UsageError(opt.catalog_path + ": " + e.what());
    }
    catalog = &owned;
  }
  std::set<std::string> pinned = default_pinned_mismatches();
  if (!opt.expected_path.empty()) pinned = parse_pinned(read_file(opt.expected_path, "pinned set"));

  const VerificationReport report = audit_catalog(*catalog);
  if (opt.format == Format::kRecords) {
    write_records(out, report);
  } else {
    write_text(out, report);
  }

  const std::set<std::string> found = report.mismatch_labels();
  if (found == pinned) {
    if (opt.format == Format::kText) {
      out << "mismatch set matches the pinned set (" << pinned.size() << " entries)\n";
    }
    return kExitOk;
  }
  std::set<std::string> unexpected, missing;
  std::set_difference(found.begin(), found.end(), pinned.begin(), pinned.end(),
                      std::inserter(unexpected, unexpected.end()));
  std::set_difference(pinned.begin(), pinned.end(), found.begin(), found.end(),
                      std::inserter(missing, missing.end()));
  err << "mismatch set differs from the pinned set: unexpected " << join(unexpected)
      << "; missing " << join(missing) << "\n";
  return kExitMismatch;
}

int enumerate(const Options& opt, std::ostream& out) {
  if (opt.cap < 1) throw UsageError("--cap must be at least 1, got " + std::to_string(opt.cap));
  const std::vector<CandidateEntry> list = full_candidate_list(opt.cap);
  if (opt.format == Format::kRecords) {
    for (const auto& e : list) {
      out << e.case_label << '\t' << format_pretzel(e.knot) << '\t' << e.constraint.to_string()
          << '\t' << (e.nonhyperbolic ? "nonhyperbolic" : "-") << '\t'
          << (e.conjectural ? "conjectural" : "-") << '\n';
    }
    return kExitOk;
  }
  const CandidateFamily families[] = {enumerate_case1(), enumerate_case2(),
                                      enumerate_case3(opt.cap), enumerate_case4()};
  for (const auto& f : families) {
    out << "case " << f.case_label << ": " << f.description << " (" << f.knots.size()
        << " knots)\n";
  }
  out << "\n";
  for (const auto& e : list) {
    out << "  [" << e.case_label << "] " << format_pretzel(e.knot) << "  " << e.constraint.to_string();
    if (e.nonhyperbolic) out << "  (not hyperbolic)";
    if (e.conjectural) out << "  (conjectural)";
    out << "\n";
  }
  out << "total: " << list.size() << " knots\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seifert fibered surgeries on Montesinos knots", "sfsurg"};
  app.require_subcommand(1);

  Options opt;
  const std::map<std::string, Format> formats{{"text", Format::kText},
                                              {"records", Format::kRecords}};
  app.add_option("--format", opt.format, "Output format: text or records")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("text|records");
  app.fallthrough();

  std::function<int()> action;

  auto* verify = app.add_subcommand("verify-table", "Audit the catalog against |H1| = |p|");
  verify->add_option("catalog", opt.catalog_path, "Catalog file (JSON Lines); default: built in");
  verify->add_option("--expected", opt.expected_path, "Pinned mismatch labels, one per line");
  verify->callback([&] { action = [&] { return verify_table(opt, out, err); }; });

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the candidate knots");
  enumerate_cmd->add_option("--cap", opt.cap, "Largest n in the conjectural family")
      ->capture_default_str();
  enumerate_cmd->callback([&] { action = [&] { return enumerate(opt, out); }; });

  auto* h1 = app.add_subcommand("h1", "Order of H1 of a Seifert space (0 if infinite)");
  h1->add_option("sfs", opt.sfs, "e.g. \"M(-1/2,1/3,-2/5)\"")->required();
  h1->callback([&] {
    action = [&] {
      out << h1_order(parse_sfs(opt.sfs)) << "\n";
      return kExitOk;
    };
  });

  auto* dbc = app.add_subcommand("dbc", "Double branched cover of a Montesinos link");
  dbc->add_option("knot", opt.knot, "e.g. \"K(-1/2,1/3,1/7)\" or \"P(3,3,4;-1)\"")->required();
  dbc->callback([&] {
    action = [&] {
      out << double_branched_cover(parse_knot(opt.knot)).to_string() << "\n";
      return kExitOk;
    };
  });

  auto* normalize = app.add_subcommand("sfs-normalize", "Normal form M(b; b1/a1, ...)");
  normalize->add_option("sfs", opt.sfs, "Seifert space")->required();
  normalize->callback([&] {
    action = [&] {
      out << normalize_sfs(parse_sfs(opt.sfs)).to_string() << "\n";
      return kExitOk;
    };
  });

  auto* dist = app.add_subcommand("slope-distance", "Distance between two slopes");
  dist->add_option("r1", opt.r1, "p/q")->required();
  dist->add_option("r2", opt.r2, "p/q")->required();
  dist->callback([&] {
    action = [&] {
      out << distance(parse_slope(opt.r1), parse_slope(opt.r2)) << "\n";
      return kExitOk;
    };
  });

  auto* twist = app.add_subcommand("twist", "Slope on K_n matching slope r2 on the base knot");
  twist->add_option("r2", opt.r2, "p/q")->required();
  twist->add_option("n", opt.n, "Number of full twists")->required();
  twist->add_option("--winding", opt.winding, "Winding number")->capture_default_str();
  twist->callback([&] {
    action = [&] {
      out << twist_correspondence(parse_slope(opt.r2), parse_integer(opt.n),
                                  parse_integer(opt.winding))
                 .to_string()
          << "\n";
      return kExitOk;
    };
  });

  auto* trick = app.add_subcommand("trick-slope", "Tangle slope r0 - r of the Montesinos trick");
  trick->add_option("r0", opt.r1, "Framing (integer)")->required();
  trick->add_option("r", opt.r2, "Surgery slope (integer)")->required();
  trick->callback([&] {
    action = [&] {
      out << trick_tangle_slope(parse_slope(opt.r1), parse_slope(opt.r2)).to_string() << "\n";
      return kExitOk;
    };
  });

  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--format") {
      ++i;
      continue;
    }
    if (a.starts_with("-")) continue;
    if (app.get_subcommand_no_throw(a) == nullptr) {
      err << "error: unknown subcommand '" << a << "'\n";
      return kExitUsage;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace sfsurg
