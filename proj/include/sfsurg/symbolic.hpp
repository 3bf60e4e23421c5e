#pragma once

#include <string>
#include <string_view>

#include "sfsurg/slope.hpp"

namespace sfsurg {

// coefficient * n + constant, for a single integer parameter n.
struct AffineExpr {
  Integer coefficient = 0;
  Integer constant = 0;

  Integer evaluate(const Integer& n) const { return coefficient * n + constant; }
  bool is_constant() const { return coefficient == 0; }

  // "17", "-n", "2n+1", "4n-5"; parenthesized when not constant.
  std::string to_string(std::string_view parameter) const;

  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
};

// A fraction whose numerator and denominator are affine in one parameter,
// kept exactly as written (no reduction) so that text round-trips.
struct SymbolicFraction {
  AffineExpr num;
  AffineExpr den{0, 1};

  bool is_constant() const { return num.is_constant() && den.is_constant(); }

  // Canonical value at n; 1/0 when the denominator vanishes. Throws
  // std::invalid_argument if both parts vanish.
  ExtendedRational evaluate(const Integer& n = 0) const;

  std::string to_string(std::string_view parameter) const;

  friend bool operator==(const SymbolicFraction&, const SymbolicFraction&) = default;
};

// Grammar: affine ["/" affine], where affine is a signed sum of terms
// "k", "kn", "n" (n being `parameter`), optionally wrapped in parentheses.
// An empty `parameter` admits constants only. Whitespace is ignored.
SymbolicFraction parse_symbolic_fraction(std::string_view text, std::string_view parameter);

}  // namespace sfsurg
