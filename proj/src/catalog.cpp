#include "sfsurg/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "embedded_data.hpp"
#include "sfsurg/surgery.hpp"

namespace sfsurg {

using json = nlohmann::json;

namespace {

// Field-level reader for one JSON record.
class RecordReader {
 public:
  RecordReader(const json& record, std::size_t line) : record_(record), line_(line) {}

  [[noreturn]] void fail(const std::string& field, const std::string& detail) const {
    throw CatalogError(line_, field, detail);
  }

  void check_keys(std::initializer_list<std::string_view> allowed) const {
    for (const auto& [key, value] : record_.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        fail(key, "unknown field");
      }
    }
  }

  bool has(const std::string& field) const { return record_.contains(field); }

  const json& get(const std::string& field) const {
    if (!record_.contains(field)) fail(field, "missing field");
    return record_.at(field);
  }

  std::string string(const std::string& field) const { return as_string(get(field), field); }

  std::string as_string(const json& value, const std::string& field) const {
    if (!value.is_string()) fail(field, "expected a string");
    return value.get<std::string>();
  }

  Integer integer(const json& value, const std::string& field) const {
    if (!value.is_number_integer()) fail(field, "expected an integer");
    return Integer(value.get<long long>());
  }

  const json& array(const std::string& field) const {
    const json& value = get(field);
    if (!value.is_array()) fail(field, "expected an array");
    return value;
  }

  SymbolicFraction fraction(const json& value, const std::string& field,
                            std::string_view parameter) const {
    std::string text = as_string(value, field);
    try {
      return parse_symbolic_fraction(text, parameter);
    } catch (const std::invalid_argument& e) {
      fail(field, e.what());
    }
  }

  std::vector<SymbolicFraction> fractions(const std::string& field,
                                          std::string_view parameter) const {
    std::vector<SymbolicFraction> out;
    for (const auto& item : array(field)) out.push_back(fraction(item, field, parameter));
    return out;
  }

 private:
  const json& record_;
  std::size_t line_;
};

long long to_json_int(const Integer& n) { return n.convert_to<long long>(); }

json fractions_to_json(const std::vector<SymbolicFraction>& fs, std::string_view parameter) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(f.to_string(parameter));
  return out;
}

std::string_view outcome_name(SurgeryOutcome o) {
  return o == SurgeryOutcome::kToroidal ? "toroidal" : "small-sfs";
}

CatalogRow read_surgery(const RecordReader& r) {
  r.check_keys({"type", "id", "knot", "extra", "slope", "claimed", "param", "framing"});
  CatalogRow row;
  row.id = r.string("id");
  if (row.id.empty()) r.fail("id", "empty id");

  if (r.has("param")) {
    const json& p = r.get("param");
    if (!p.is_object()) r.fail("param", "expected an object");
    ParameterRange range;
    range.name = r.as_string(p.value("name", json()), "param.name");
    if (range.name.empty() ||
        !std::all_of(range.name.begin(), range.name.end(),
                     [](char c) { return std::isalpha(static_cast<unsigned char>(c)); })) {
      r.fail("param.name", "parameter name must be alphabetic");
    }
    range.min = r.integer(p.value("min", json()), "param.min");
    range.max = r.integer(p.value("max", json()), "param.max");
    if (range.min > range.max) r.fail("param", "min exceeds max");
    const json excluded = p.value("excluded", json::array());
    if (!excluded.is_array()) r.fail("param.excluded", "expected an array");
    for (const auto& e : excluded) range.excluded.push_back(r.integer(e, "param.excluded"));
    range.note = p.contains("note") ? r.as_string(p.at("note"), "param.note") : "";
    for (const auto& [key, value] : p.items()) {
      if (key != "name" && key != "min" && key != "max" && key != "excluded" && key != "note") {
        r.fail("param." + key, "unknown field");
      }
    }
    row.param = std::move(range);
  }
  const std::string_view parameter = row.parameter_name();

  row.knot = r.fractions("knot", parameter);
  if (row.knot.empty()) r.fail("knot", "no tangles");
  row.extra = r.has("extra") ? r.integer(r.get("extra"), "extra") : Integer(0);
  row.slope = r.fraction(r.get("slope"), "slope", parameter);
  row.claimed = r.fractions("claimed", parameter);

  if (r.has("framing")) {
    const json& f = r.get("framing");
    if (!f.is_object()) r.fail("framing", "expected an object");
    row.framing = Framing{r.integer(f.value("value", json()), "framing.value"),
                          r.as_string(f.value("provenance", json()), "framing.provenance")};
  }

  auto check_instance = [&](const Integer& n) {
    std::string field = "knot";
    try {
      MontesinosLink k = row.knot_at(n);
      if (!is_knot(k)) r.fail("knot", k.to_string() + " is not a knot");
      field = "slope";
      if (row.slope_at(n).is_meridian()) r.fail("slope", "trivial slope 1/0");
      if (!row.is_family()) {
        field = "claimed";
        row.claimed_at(n);
      }
    } catch (const std::invalid_argument& e) {
      r.fail(field, e.what());
    }
  };
  if (row.is_family()) {
    for (Integer n = row.param->min; n <= row.param->max; ++n) check_instance(n);
  } else {
    check_instance(0);
  }
  return row;
}

TubedExceptionalEntry read_tubed(const RecordReader& r) {
  r.check_keys({"type", "id", "match", "kinds", "fractions", "outcomes"});
  TubedExceptionalEntry entry;
  entry.id = r.string("id");
  if (entry.id.empty()) r.fail("id", "empty id");
  const std::string match = r.string("match");
  if (match == "exact") {
    entry.match = TubedMatch::kExact;
  } else if (match == "pretzel-tangles") {
    entry.match = TubedMatch::kPretzelTangles;
  } else {
    r.fail("match", "expected 'exact' or 'pretzel-tangles'");
  }
  for (const auto& k : r.array("kinds")) {
    Integer kind = r.integer(k, "kinds");
    if (kind != 0 && kind != 1) r.fail("kinds", "kind must be 0 or 1");
    entry.kinds.push_back(kind.convert_to<int>());
  }
  for (const auto& f : r.fractions("fractions", "")) entry.fractions.push_back(f.evaluate());
  if (entry.match == TubedMatch::kExact) {
    if (entry.fractions.size() != 2) r.fail("fractions", "an exact entry needs two fractions");
    for (int kind : entry.kinds) {
      try {
        TubedKnot(kind, entry.fractions[0], entry.fractions[1]);
      } catch (const std::invalid_argument& e) {
        r.fail("fractions", e.what());
      }
    }
  } else if (!entry.fractions.empty()) {
    r.fail("fractions", "a pattern entry lists no fractions");
  }
  for (const auto& o : r.array("outcomes")) {
    if (!o.is_object()) r.fail("outcomes", "expected an object");
    TubedOutcome outcome;
    const std::string slope = r.as_string(o.value("slope", json()), "outcomes.slope");
    if (slope != "pretzel") {
      try {
        outcome.slope.numeric = parse_slope(slope);
      } catch (const std::invalid_argument& e) {
        r.fail("outcomes.slope", e.what());
      }
    }
    const std::string kind = r.as_string(o.value("outcome", json()), "outcomes.outcome");
    if (kind == "toroidal") {
      outcome.outcome = SurgeryOutcome::kToroidal;
    } else if (kind == "small-sfs") {
      outcome.outcome = SurgeryOutcome::kSmallSeifert;
    } else {
      r.fail("outcomes.outcome", "expected 'toroidal' or 'small-sfs'");
    }
    entry.outcomes.push_back(outcome);
  }
  return entry;
}

json row_to_json(const CatalogRow& row) {
  const std::string_view parameter = row.parameter_name();
  json out;
  out["type"] = "surgery";
  out["id"] = row.id;
  out["knot"] = fractions_to_json(row.knot, parameter);
  out["extra"] = to_json_int(row.extra);
  out["slope"] = row.slope.to_string(parameter);
  out["claimed"] = fractions_to_json(row.claimed, parameter);
  if (row.param) {
    json excluded = json::array();
    for (const auto& e : row.param->excluded) excluded.push_back(to_json_int(e));
    out["param"] = {{"name", row.param->name},
                    {"min", to_json_int(row.param->min)},
                    {"max", to_json_int(row.param->max)},
                    {"excluded", excluded},
                    {"note", row.param->note}};
  }
  if (row.framing) {
    out["framing"] = {{"value", to_json_int(row.framing->value)},
                      {"provenance", row.framing->provenance}};
  }
  return out;
}

json tubed_to_json(const TubedExceptionalEntry& entry) {
  json out;
  out["type"] = "tubed";
  out["id"] = entry.id;
  out["match"] = entry.match == TubedMatch::kExact ? "exact" : "pretzel-tangles";
  out["kinds"] = entry.kinds;
  json fractions = json::array();
  for (const auto& f : entry.fractions) fractions.push_back(f.to_string());
  out["fractions"] = fractions;
  json outcomes = json::array();
  for (const auto& o : entry.outcomes) {
    outcomes.push_back({{"slope", o.slope.to_string()}, {"outcome", outcome_name(o.outcome)}});
  }
  out["outcomes"] = outcomes;
  return out;
}

bool has_kind(const TubedExceptionalEntry& entry, int kind) {
  return std::find(entry.kinds.begin(), entry.kinds.end(), kind) != entry.kinds.end();
}

std::vector<TubedOutcome> negated(std::vector<TubedOutcome> outcomes) {
  for (auto& o : outcomes) {
    if (o.slope.numeric) o.slope.numeric = -*o.slope.numeric;
  }
  return outcomes;
}

}  // namespace

bool ParameterRange::is_excluded(const Integer& n) const {
  return std::find(excluded.begin(), excluded.end(), n) != excluded.end();
}

std::string_view CatalogRow::parameter_name() const {
  return param ? std::string_view(param->name) : std::string_view();
}

MontesinosLink CatalogRow::knot_at(const Integer& n) const {
  std::vector<ExtendedRational> tangles;
  Integer twist = extra;
  for (const auto& f : knot) {
    ExtendedRational value = f.evaluate(n);
    if (value.is_infinite()) {
      throw std::invalid_argument("tangle " + f.to_string(parameter_name()) + " is 1/0");
    }
    if (value.is_integer()) {
      twist += value.num();
    } else {
      tangles.push_back(std::move(value));
    }
  }
  return MontesinosLink(std::move(tangles), std::move(twist));
}

Slope CatalogRow::slope_at(const Integer& n) const {
  ExtendedRational value = slope.evaluate(n);
  return Slope(value.num(), value.den());
}

SeifertInvariants CatalogRow::claimed_at(const Integer& n) const {
  std::vector<ExtendedRational> fibers;
  for (const auto& f : claimed) {
    ExtendedRational value = f.evaluate(n);
    if (value.is_infinite()) {
      throw std::invalid_argument("fiber " + f.to_string(parameter_name()) + " is 1/0");
    }
    fibers.push_back(std::move(value));
  }
  return sfs_from_fractions(fibers);
}

std::string SlopeDescriptor::to_string() const {
  return numeric ? numeric->to_string() : "pretzel";
}

const CatalogRow* Catalog::find_row(std::string_view id) const {
  for (const auto& row : rows) {
    if (row.id == id) return &row;
  }
  return nullptr;
}

CatalogError::CatalogError(std::size_t line, std::string field, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ", field '" + field + "': " + detail),
      line_(line),
      field_(std::move(field)) {}

Catalog load_catalog(std::istream& in) {
  Catalog catalog;
  std::set<std::string> ids;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (std::all_of(text.begin(), text.end(),
                    [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
      continue;
    }
    json record;
    try {
      record = json::parse(text);
    } catch (const json::parse_error& e) {
      throw CatalogError(line, "<record>", e.what());
    }
    if (!record.is_object()) throw CatalogError(line, "<record>", "expected a JSON object");
    RecordReader reader(record, line);
    const std::string type = reader.string("type");
    std::string id;
    if (type == "surgery") {
      catalog.rows.push_back(read_surgery(reader));
      id = catalog.rows.back().id;
    } else if (type == "tubed") {
      catalog.tubed.push_back(read_tubed(reader));
      id = catalog.tubed.back().id;
    } else {
      reader.fail("type", "expected 'surgery' or 'tubed'");
    }
    if (!ids.insert(id).second) reader.fail("id", "duplicate id '" + id + "'");
  }
  return catalog;
}

Catalog load_catalog(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_catalog(in);
}

Catalog load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read catalog file '" + path.string() + "'");
  }
  return load_catalog(in);
}

std::string_view default_catalog_text() { return embedded::catalog_text(); }

const Catalog& default_catalog() {
  static const Catalog catalog = load_catalog(default_catalog_text());
  return catalog;
}

void emit_catalog(std::ostream& out, const Catalog& catalog) {
  // Surgery rows first, then tubed entries, each in stored order.
  for (const auto& row : catalog.rows) out << row_to_json(row).dump() << '\n';
  for (const auto& entry : catalog.tubed) out << tubed_to_json(entry).dump() << '\n';
}

std::string emit_catalog(const Catalog& catalog) {
  std::ostringstream out;
  emit_catalog(out, catalog);
  return out.str();
}

std::string_view to_string(AuditStatus status) {
  switch (status) {
    case AuditStatus::kPass:
      return "PASS";
    case AuditStatus::kMismatch:
      return "MISMATCH";
    case AuditStatus::kDegenerate:
      return "DEGENERATE";
  }
  return "?";
}

std::string RowStatus::label() const {
  if (!parameter) return id;
  return id + "[n=" + parameter->str() + "]";
}

namespace {

// Shared by fixed and family rows. The two sides of the comparison are
// computed independently: |p| from the slope alone, |H1| from the claimed
// invariants alone.
RowStatus audit_instance(const CatalogRow& row, const Integer& n) {
  RowStatus st;
  st.id = row.id;
  if (row.is_family()) st.parameter = n;
  const std::string_view parameter = row.parameter_name();

  const Slope slope = row.slope_at(n);
  st.slope = slope.to_string();
  if (row.framing && slope.is_integral()) {
    st.trick_slope = trick_tangle_slope(Slope(row.framing->value, 1), slope);
  }
  try {
    const SurgerySpec surgery(row.knot_at(n), slope);
    st.knot = surgery.knot().to_string();
    st.expected = surgery_h1_order(surgery);
  } catch (const std::invalid_argument& e) {
    st.status = AuditStatus::kDegenerate;
    st.reason = e.what();
    st.expected = abs(slope.p());
  }

  std::optional<SeifertInvariants> claimed;
  try {
    claimed = row.claimed_at(n);
  } catch (const std::invalid_argument& e) {
    std::string text = "M(";
    for (std::size_t i = 0; i < row.claimed.size(); ++i) {
      text += (i ? ", " : "") + row.claimed[i].to_string(parameter);
    }
    st.claimed = text + ")";
    st.status = AuditStatus::kDegenerate;
    st.reason = e.what();
  }
  if (claimed) {
    st.claimed = claimed->to_string();
    st.computed = h1_order(*claimed);
    st.claimed_small = is_small_sfs(*claimed);
  }

  if (row.param && row.param->is_excluded(n)) {
    st.status = AuditStatus::kDegenerate;
    st.reason = row.param->note.empty() ? "excluded parameter value" : row.param->note;
    return st;
  }
  if (st.status == AuditStatus::kDegenerate) return st;

  if (*st.computed != st.expected) {
    st.status = AuditStatus::kMismatch;
    st.reason = "|H1| of claimed space differs from |p|";
  } else if (!st.claimed_small) {
    st.status = AuditStatus::kMismatch;
    st.reason = "claimed space has more than three exceptional fibers";
  } else {
    st.status = AuditStatus::kPass;
  }
  return st;
}

}  // namespace

RowStatus verify_row(const CatalogRow& row) {
  if (row.is_family()) {
    throw std::invalid_argument("row " + row.id + " is a family; use verify_family");
  }
  return audit_instance(row, 0);
}

std::vector<RowStatus> verify_family(const CatalogRow& row, const Integer& lo, const Integer& hi) {
  if (!row.is_family()) {
    throw std::invalid_argument("row " + row.id + " has no parameter");
  }
  std::vector<RowStatus> out;
  for (Integer n = lo; n <= hi; ++n) out.push_back(audit_instance(row, n));
  return out;
}

std::vector<RowStatus> verify_family(const CatalogRow& row) {
  if (!row.is_family()) {
    throw std::invalid_argument("row " + row.id + " has no parameter");
  }
  return verify_family(row, row.param->min, row.param->max);
}

std::vector<TubedOutcome> tubed_exceptional_lookup(const Catalog& catalog, const TubedKnot& k) {
  for (const auto& entry : catalog.tubed) {
    if (entry.match != TubedMatch::kExact || !has_kind(entry, k.kind())) continue;
    if (k.first() == entry.fractions[0] && k.second() == entry.fractions[1]) {
      return entry.outcomes;
    }
    if (k.first() == -entry.fractions[0] && k.second() == -entry.fractions[1]) {
      return negated(entry.outcomes);
    }
  }
  const bool pretzel_tangles = abs(k.first().num()) == 1 && abs(k.second().num()) == 1;
  for (const auto& entry : catalog.tubed) {
    if (entry.match == TubedMatch::kPretzelTangles && has_kind(entry, k.kind()) &&
        pretzel_tangles) {
      return entry.outcomes;
    }
  }
  return {};
}

}  // namespace sfsurg
