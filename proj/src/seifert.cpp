#include "sfsurg/seifert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sfsurg {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::size_t exceptional_count(const SeifertInvariants& normal) { return normal.fibers().size(); }

}  // namespace

SeifertInvariants::SeifertInvariants(Integer b, std::vector<ExceptionalFiber> fibers)
    : b_(std::move(b)), fibers_(std::move(fibers)) {
  for (const auto& f : fibers_) {
    if (f.alpha < 1) {
      throw std::invalid_argument("fiber " + f.beta.str() + "/" + f.alpha.str() +
                                  " has alpha < 1");
    }
    if (gcd(f.alpha, f.beta) != 1) {
      throw std::invalid_argument("fiber " + f.beta.str() + "/" + f.alpha.str() +
                                  " is not reduced");
    }
  }
  normalized_ = std::is_sorted(fibers_.begin(), fibers_.end()) &&
                std::all_of(fibers_.begin(), fibers_.end(), [](const ExceptionalFiber& f) {
                  return f.alpha >= 2 && f.beta > 0 && f.beta < f.alpha;
                });
}

std::string SeifertInvariants::to_string() const {
  std::ostringstream os;
  os << "M(" << b_;
  for (std::size_t i = 0; i < fibers_.size(); ++i) {
    os << (i == 0 ? "; " : ", ") << fibers_[i].beta << "/" << fibers_[i].alpha;
  }
  os << ")";
  return os.str();
}

SeifertInvariants sfs_from_fractions(std::span<const ExtendedRational> fractions) {
  std::vector<ExceptionalFiber> fibers;
  fibers.reserve(fractions.size());
  for (const auto& r : fractions) {
    if (r.is_infinite()) {
      throw std::invalid_argument("degenerate fiber 1/0");
    }
    fibers.push_back({r.den(), r.num()});
  }
  return SeifertInvariants(0, std::move(fibers));
}

SeifertInvariants normalize_sfs(const SeifertInvariants& m) {
  Integer b = m.b();
  std::vector<ExceptionalFiber> fibers;
  for (const auto& f : m.fibers()) {
    Integer whole = floor_div(f.beta, f.alpha);
    b += whole;
    if (f.alpha == 1) continue;
    fibers.push_back({f.alpha, f.beta - whole * f.alpha});
  }
  std::sort(fibers.begin(), fibers.end());
  return SeifertInvariants(std::move(b), std::move(fibers));
}

SeifertInvariants reverse_orientation(const SeifertInvariants& m) {
  std::vector<ExceptionalFiber> fibers;
  fibers.reserve(m.fibers().size());
  for (const auto& f : m.fibers()) fibers.push_back({f.alpha, -f.beta});
  return SeifertInvariants(-m.b(), std::move(fibers));
}

ExtendedRational euler_number(const SeifertInvariants& m) {
  Rational sum = m.b();
  for (const auto& f : m.fibers()) sum += Rational(f.beta, f.alpha);
  return ExtendedRational(Rational(-sum));
}

Integer h1_order(const SeifertInvariants& m) {
  // prod(alpha) * b + sum_i beta_i * prod_{j != i} alpha_j, accumulated
  // left to right as (P, S) -> (P * alpha, S * alpha + beta * P).
  Integer product = 1;
  Integer numerator = m.b();
  for (const auto& f : m.fibers()) {
    numerator = numerator * f.alpha + f.beta * product;
    product *= f.alpha;
  }
  return abs(numerator);
}

AbelianGroup first_homology(const SeifertInvariants& m) {
  const std::size_t k = m.fibers().size();
  IntegerMatrix relations(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    relations(i, i) = m.fibers()[i].alpha;
    relations(i, k) = m.fibers()[i].beta;
    relations(k, i) = 1;
  }
  relations(k, k) = -m.b();
  return cokernel(relations);
}

std::optional<Orientation> homeomorphic(const SeifertInvariants& a, const SeifertInvariants& b) {
  const SeifertInvariants na = normalize_sfs(a);
  const SeifertInvariants nb = normalize_sfs(b);
  const std::size_t ka = exceptional_count(na);
  const std::size_t kb = exceptional_count(nb);
  if (ka != kb && (ka < 3 || kb < 3)) {
    throw std::invalid_argument("cannot compare " + na.to_string() + " with " + nb.to_string() +
                                ": fewer than three exceptional fibers");
  }
  if (na == nb) return Orientation::kPreserving;
  if (na == normalize_sfs(reverse_orientation(nb))) return Orientation::kReversing;
  return std::nullopt;
}

SeifertInvariants double_branched_cover(const MontesinosLink& k) {
  std::vector<ExceptionalFiber> fibers;
  fibers.reserve(k.length());
  for (const auto& t : k.tangles()) fibers.push_back({t.den(), t.num()});
  return SeifertInvariants(k.extra_twists(), std::move(fibers));
}

bool is_small_sfs(const SeifertInvariants& m) {
  return exceptional_count(normalize_sfs(m)) <= 3;
}

}  // namespace sfsurg
