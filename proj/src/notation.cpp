#include "sfsurg/notation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sfsurg {

namespace {

struct Call {
  char head;
  std::string body;
};

Call split_call(std::string_view text, std::string_view heads) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.size() < 3 || heads.find(compact.front()) == std::string_view::npos ||
      compact[1] != '(' || compact.back() != ')') {
    throw std::invalid_argument("malformed expression '" + std::string(text) + "'");
  }
  return {compact.front(), compact.substr(2, compact.size() - 3)};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  if (s.empty()) return items;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    items.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  for (const auto& item : items) {
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + s + "'");
  }
  return items;
}

// Splits "list;tail" or "head;list" at the single ';'.
std::pair<std::string, std::optional<std::string>> split_semicolon(const std::string& body) {
  std::size_t semi = body.find(';');
  if (semi == std::string::npos) return {body, std::nullopt};
  if (body.find(';', semi + 1) != std::string::npos) {
    throw std::invalid_argument("more than one ';' in '" + body + "'");
  }
  return {body.substr(0, semi), body.substr(semi + 1)};
}

}  // namespace

MontesinosLink parse_knot(std::string_view text) {
  Call call = split_call(text, "KP");
  auto [list, twist] = split_semicolon(call.body);
  Integer extra = twist ? parse_integer(*twist) : Integer(0);
  std::vector<std::string> items = split_list(list);
  if (items.empty()) {
    throw std::invalid_argument("no tangles in '" + std::string(text) + "'");
  }
  if (call.head == 'P') {
    std::vector<Integer> qs;
    for (const auto& item : items) qs.push_back(parse_integer(item));
    return pretzel(qs, extra);
  }
  std::vector<ExtendedRational> tangles;
  for (const auto& item : items) tangles.push_back(parse_fraction(item));
  return MontesinosLink(std::move(tangles), std::move(extra));
}

SeifertInvariants parse_sfs(std::string_view text) {
  Call call = split_call(text, "M");
  auto [first, rest] = split_semicolon(call.body);
  Integer b = 0;
  std::string list = first;
  if (rest) {
    b = parse_integer(first);
    list = *rest;
  }
  std::vector<ExtendedRational> fractions;
  for (const auto& item : split_list(list)) fractions.push_back(parse_fraction(item));
  SeifertInvariants raw = sfs_from_fractions(fractions);
  return SeifertInvariants(std::move(b), raw.fibers());
}

std::string format_pretzel(const MontesinosLink& k) {
  auto qs = k.pretzel_parameters();
  if (!qs) return k.to_string();
  std::ostringstream os;
  os << "P(";
  for (std::size_t i = 0; i < qs->size(); ++i) os << (i ? ", " : "") << (*qs)[i];
  os << "; " << k.extra_twists() << ")";
  return os.str();
}

}  // namespace sfsurg
