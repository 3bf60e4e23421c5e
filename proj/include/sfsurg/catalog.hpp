#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sfsurg/seifert.hpp"
#include "sfsurg/slope.hpp"
#include "sfsurg/symbolic.hpp"
#include "sfsurg/tangle.hpp"

namespace sfsurg {

// Parameter of a family row and the values it is audited over.
struct ParameterRange {
  std::string name;
  Integer min = 0;
  Integer max = 0;
  std::vector<Integer> excluded;
  std::string note;

  bool is_excluded(const Integer& n) const;
};

// Framing r0 of a strongly invertible knot for the Montesinos trick,
// recorded together with where it comes from.
struct Framing {
  Integer value;
  std::string provenance;
};

// One claimed surgery K(r) = M(r1, r2, r3). Fractions are stored as written;
// a family row has fractions affine in its parameter.
struct CatalogRow {
  std::string id;
  std::vector<SymbolicFraction> knot;
  Integer extra = 0;
  SymbolicFraction slope;
  std::vector<SymbolicFraction> claimed;
  std::optional<ParameterRange> param;
  std::optional<Framing> framing;

  bool is_family() const { return param.has_value(); }
  std::string_view parameter_name() const;

  // Instantiations at parameter value n (ignored for fixed rows).
  //
  // knot_at moves integral tangle values into the twist term: for small |n|
  // a family member degenerates to a shorter Montesinos link. Throws
  // std::invalid_argument if a tangle becomes 1/0.
  MontesinosLink knot_at(const Integer& n = 0) const;
  Slope slope_at(const Integer& n = 0) const;
  // Throws std::invalid_argument if a claimed fiber becomes 1/0.
  SeifertInvariants claimed_at(const Integer& n = 0) const;
};

enum class SurgeryOutcome { kToroidal, kSmallSeifert };

// A numeric slope, or the symbolic boundary slope of the pretzel surface.
struct SlopeDescriptor {
  std::optional<Slope> numeric;

  static SlopeDescriptor pretzel_slope() { return {}; }
  bool is_pretzel_slope() const { return !numeric.has_value(); }
  std::string to_string() const;

  friend bool operator==(const SlopeDescriptor&, const SlopeDescriptor&) = default;
};

struct TubedOutcome {
  SlopeDescriptor slope;
  SurgeryOutcome outcome;

  friend bool operator==(const TubedOutcome&, const TubedOutcome&) = default;
};

// Which tubed knots an exceptional-surgery entry covers.
enum class TubedMatch {
  kExact,           // the listed fractions, or their mirror
  kPretzelTangles,  // any K^a(1/q1, 1/q2)
};

struct TubedExceptionalEntry {
  std::string id;
  TubedMatch match = TubedMatch::kExact;
  std::vector<int> kinds;
  std::vector<ExtendedRational> fractions;  // two entries for kExact
  std::vector<TubedOutcome> outcomes;
};

struct Catalog {
  std::vector<CatalogRow> rows;
  std::vector<TubedExceptionalEntry> tubed;

  const CatalogRow* find_row(std::string_view id) const;
};

// Parse failure with the 1-based line and the field at fault.
class CatalogError : public std::runtime_error {
 public:
  CatalogError(std::size_t line, std::string field, const std::string& detail);

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

// JSON Lines: one object per line, blank lines ignored. Surgery records
// carry "type":"surgery"; tubed exceptional entries "type":"tubed".
// Rejects duplicate ids, non-knots, and the trivial slope 1/0.
Catalog load_catalog(std::istream& in);
Catalog load_catalog(std::string_view text);
Catalog load_catalog_file(const std::filesystem::path& path);

// The catalog shipped with the library.
const Catalog& default_catalog();
std::string_view default_catalog_text();

// Canonical serialization; load_catalog(emit_catalog(c)) reproduces c and
// emitting the shipped file reproduces it byte for byte.
void emit_catalog(std::ostream& out, const Catalog& catalog);
std::string emit_catalog(const Catalog& catalog);

// Outcome of the homology audit of one catalog surgery (or one value of a
// family row).
enum class AuditStatus { kPass, kMismatch, kDegenerate };

std::string_view to_string(AuditStatus status);

struct RowStatus {
  std::string id;
  std::optional<Integer> parameter;
  AuditStatus status = AuditStatus::kPass;
  std::optional<Integer> computed;  // |H1| of the claimed space
  Integer expected = 0;             // |p| of the slope
  bool claimed_small = true;
  std::string reason;
  std::string knot;
  std::string slope;
  std::string claimed;
  std::optional<Slope> trick_slope;  // r0 - r when a framing is recorded

  // "id" or "id[n=-3]".
  std::string label() const;
};

// Fixed rows only; throws std::invalid_argument for a family row.
RowStatus verify_row(const CatalogRow& row);

// Family rows over [lo, hi]; the second overload uses the catalog range.
std::vector<RowStatus> verify_family(const CatalogRow& row, const Integer& lo, const Integer& hi);
std::vector<RowStatus> verify_family(const CatalogRow& row);

// Exceptional fillings of the tubed knot in its solid torus, from the
// catalog's entries. Exact entries take precedence over pattern entries; a
// mirror match negates the slopes. Empty means every nontrivial filling is
// hyperbolic.
std::vector<TubedOutcome> tubed_exceptional_lookup(const Catalog& catalog, const TubedKnot& k);

}  // namespace sfsurg
