#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sfsurg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A fraction num/den in lowest terms with den >= 0. The only value with
// den == 0 is 1/0 (infinity); zero is 0/1. Used for tangle fractions and
// exceptional-fiber data, where the sign lives in the numerator.
class ExtendedRational {
 public:
  // Reduces to canonical form. Throws std::invalid_argument on 0/0.
  ExtendedRational(Integer num, Integer den);
  ExtendedRational(long long value) : num_(value), den_(1) {}
  explicit ExtendedRational(const Rational& value);

  static ExtendedRational infinity() { return {1, 0}; }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_infinite() const { return den_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // Throws std::domain_error for infinity.
  Rational to_rational() const;

  ExtendedRational operator-() const;

  // "p/q", with "1/0" for infinity.
  std::string to_string() const;

  friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;

 private:
  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

// A surgery slope p/q on a torus in meridian-longitude coordinates.
// Same canonical form as ExtendedRational; 1/0 is the meridian.
class Slope {
 public:
  Slope(Integer p, Integer q);
  Slope(long long p) : p_(p), q_(1) {}

  static Slope meridian() { return {1, 0}; }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

  bool is_meridian() const { return q_ == 0; }
  bool is_integral() const { return q_ == 1; }

  Slope operator-() const;
  ExtendedRational as_fraction() const { return {p_, q_}; }
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Integer p_;
  Integer q_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

Slope make_slope(const Integer& p, const Integer& q);

// Minimal geometric intersection number |p_a q_b - p_b q_a|.
Integer distance(const Slope& a, const Slope& b);

// Expansion r = a0 + 1/(a1 + 1/(... + 1/ak)) with every quotient truncated
// toward zero, so signed fractions keep signed terms: -1/2 -> [0; -2].
// Throws std::invalid_argument for infinity.
std::vector<Integer> continued_fraction(const ExtendedRational& r);

// An integral 2x2 change of torus basis, acting on column vectors (p, q).
struct BasisChange {
  Integer m11 = 1, m12 = 0;
  Integer m21 = 0, m22 = 1;

  Integer determinant() const { return m11 * m22 - m12 * m21; }
};

// Throws std::invalid_argument unless det(m) = +-1.
Slope apply_basis_change(const Slope& r, const BasisChange& m);

// Text form "p/q" or a bare integer "p". Signs may appear on either part.
// Throws std::invalid_argument naming the token on malformed input.
ExtendedRational parse_fraction(std::string_view text);
Slope parse_slope(std::string_view text);

// Integer literal with optional sign; no surrounding whitespace.
Integer parse_integer(std::string_view text);

}  // namespace sfsurg
