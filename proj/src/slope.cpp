#include "sfsurg/slope.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace sfsurg {

namespace {

// Canonical (num, den): den >= 0, gcd 1, infinity as (1, 0).
void canonicalize(Integer& num, Integer& den) {
  if (num == 0 && den == 0) {
    throw std::invalid_argument("0/0 is not a fraction");
  }
  if (den == 0) {
    num = 1;
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Integer g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string format_pair(const Integer& a, const Integer& b) {
  return a.str() + "/" + b.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ExtendedRational::ExtendedRational(Integer num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize(num_, den_);
}

ExtendedRational::ExtendedRational(const Rational& value)
    : num_(boost::multiprecision::numerator(value)),
      den_(boost::multiprecision::denominator(value)) {
  canonicalize(num_, den_);
}

Rational ExtendedRational::to_rational() const {
  if (is_infinite()) {
    throw std::domain_error("1/0 has no rational value");
  }
  return Rational(num_, den_);
}

ExtendedRational ExtendedRational::operator-() const {
  if (is_infinite()) return *this;
  return {-num_, den_};
}

std::string ExtendedRational::to_string() const { return format_pair(num_, den_); }

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) {
  return os << r.to_string();
}

Slope::Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  canonicalize(p_, q_);
}

Slope Slope::operator-() const {
  if (is_meridian()) return *this;
  return {-p_, q_};
}

std::string Slope::to_string() const { return format_pair(p_, q_); }

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.to_string(); }

Slope make_slope(const Integer& p, const Integer& q) { return Slope(p, q); }

Integer distance(const Slope& a, const Slope& b) {
  return abs(a.p() * b.q() - b.p() * a.q());
}

std::vector<Integer> continued_fraction(const ExtendedRational& r) {
  if (r.is_infinite()) {
    throw std::invalid_argument("continued fraction of 1/0 is undefined");
  }
  std::vector<Integer> terms;
  Integer num = r.num();
  Integer den = r.den();
  // cpp_int division truncates toward zero, which is the expansion we want.
  while (true) {
    Integer quotient = num / den;
    Integer remainder = num - quotient * den;
    terms.push_back(quotient);
    if (remainder == 0) break;
    // Next level is den / remainder; keep the denominator positive.
    num = den;
    den = remainder;
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
  return terms;
}

Slope apply_basis_change(const Slope& r, const BasisChange& m) {
  Integer det = m.determinant();
  if (det != 1 && det != -1) {
    throw std::invalid_argument("basis change has determinant " + det.str() + ", expected +-1");
  }
  return Slope(m.m11 * r.p() + m.m12 * r.q(), m.m21 * r.p() + m.m22 * r.q());
}

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
  }
  Integer value{std::string(body)};
  return negative ? Integer(-value) : value;
}

ExtendedRational parse_fraction(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return {parse_integer(trim(s)), 1};
    }
    Integer num = parse_integer(trim(s.substr(0, slash)));
    Integer den = parse_integer(trim(s.substr(slash + 1)));
    return {std::move(num), std::move(den)};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
  }
}

Slope parse_slope(std::string_view text) {
  ExtendedRational r = parse_fraction(text);
  return {r.num(), r.den()};
}

}  // namespace sfsurg
