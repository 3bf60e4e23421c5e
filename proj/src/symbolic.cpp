#include "sfsurg/symbolic.hpp"

#include <cctype>
#include <stdexcept>

namespace sfsurg {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

AffineExpr parse_affine(std::string_view s, std::string_view parameter, std::string_view whole) {
  auto fail = [&]() -> AffineExpr {
    throw std::invalid_argument("malformed expression '" + std::string(whole) + "'");
  };
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) return fail();

  AffineExpr expr;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      return fail();
    }
    first = false;
    std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    std::string_view digits = s.substr(digits_start, i - digits_start);
    bool has_parameter = false;
    if (!parameter.empty() && s.substr(i, parameter.size()) == parameter) {
      has_parameter = true;
      i += parameter.size();
    }
    if (digits.empty() && !has_parameter) return fail();
    Integer value = digits.empty() ? Integer(1) : Integer(std::string(digits));
    if (sign < 0) value = -value;
    if (has_parameter) {
      expr.coefficient += value;
    } else {
      expr.constant += value;
    }
  }
  return expr;
}

}  // namespace

std::string AffineExpr::to_string(std::string_view parameter) const {
  if (coefficient == 0) return constant.str();
  std::string out = "(";
  if (coefficient == -1) {
    out += "-";
  } else if (coefficient != 1) {
    out += coefficient.str();
  }
  out += parameter;
  if (constant > 0) out += "+" + constant.str();
  if (constant < 0) out += constant.str();
  return out + ")";
}

ExtendedRational SymbolicFraction::evaluate(const Integer& n) const {
  return {num.evaluate(n), den.evaluate(n)};
}

std::string SymbolicFraction::to_string(std::string_view parameter) const {
  return num.to_string(parameter) + "/" + den.to_string(parameter);
}

SymbolicFraction parse_symbolic_fraction(std::string_view text, std::string_view parameter) {
  const std::string s = strip_spaces(text);
  // The fraction bar is the first '/' outside parentheses.
  int depth = 0;
  std::size_t bar = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) break;
    if (s[i] == '/' && depth == 0) {
      bar = i;
      break;
    }
  }
  if (depth < 0) {
    throw std::invalid_argument("unbalanced parentheses in '" + std::string(text) + "'");
  }
  SymbolicFraction out;
  if (bar == std::string::npos) {
    out.num = parse_affine(s, parameter, text);
  } else {
    out.num = parse_affine(std::string_view(s).substr(0, bar), parameter, text);
    out.den = parse_affine(std::string_view(s).substr(bar + 1), parameter, text);
  }
  return out;
}

}  // namespace sfsurg
