#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfsurg/slope.hpp"
#include "sfsurg/smith_normal_form.hpp"
#include "sfsurg/tangle.hpp"

namespace sfsurg {

// Exceptional fiber of type (alpha, beta), gcd(alpha, beta) = 1, alpha >= 1.
struct ExceptionalFiber {
  Integer alpha;
  Integer beta;

  friend bool operator==(const ExceptionalFiber&, const ExceptionalFiber&) = default;
  friend bool operator<(const ExceptionalFiber& x, const ExceptionalFiber& y) {
    return x.alpha != y.alpha ? x.alpha < y.alpha : x.beta < y.beta;
  }
};

// Seifert fibered space over S^2: M(b; beta_1/alpha_1, ..., beta_k/alpha_k).
//
// Normal form: every alpha >= 2, 0 < beta < alpha, integer parts moved into
// b, fibers sorted by (alpha, beta). is_normalized() reports whether the
// stored data already has that shape.
class SeifertInvariants {
 public:
  SeifertInvariants() = default;
  // Throws std::invalid_argument for alpha < 1 or gcd(alpha, beta) != 1.
  SeifertInvariants(Integer b, std::vector<ExceptionalFiber> fibers);

  const Integer& b() const { return b_; }
  const std::vector<ExceptionalFiber>& fibers() const { return fibers_; }
  bool is_normalized() const { return normalized_; }

  // "M(b; beta1/alpha1, ...)".
  std::string to_string() const;

  // Literal comparison of the invariant lists.
  friend bool operator==(const SeifertInvariants& x, const SeifertInvariants& y) {
    return x.b_ == y.b_ && x.fibers_ == y.fibers_;
  }

 private:
  Integer b_ = 0;
  std::vector<ExceptionalFiber> fibers_;
  bool normalized_ = true;
};

// One fiber per fraction taken verbatim, b = 0. Throws std::invalid_argument
// on 1/0.
SeifertInvariants sfs_from_fractions(std::span<const ExtendedRational> fractions);

SeifertInvariants normalize_sfs(const SeifertInvariants& m);

// Negates b and every beta (the same space with reversed orientation).
// The result is not normalized.
SeifertInvariants reverse_orientation(const SeifertInvariants& m);

// -(b + sum beta_i/alpha_i).
ExtendedRational euler_number(const SeifertInvariants& m);

// |alpha_1 ... alpha_k * (b + sum beta_i/alpha_i)|, computed in integers;
// 0 encodes infinite first homology.
Integer h1_order(const SeifertInvariants& m);

// Smith normal form of the presentation with generators x_1..x_k, h and
// relations alpha_i x_i + beta_i h = 0, x_1 + ... + x_k = b h.
AbelianGroup first_homology(const SeifertInvariants& m);

enum class Orientation { kPreserving, kReversing };

// Compares Seifert normal forms, directly and against the orientation
// reversal. kPreserving is preferred when both hold. Throws
// std::invalid_argument if the shapes differ and either side has fewer
// than three exceptional fibers, where normal forms are not a complete
// invariant.
std::optional<Orientation> homeomorphic(const SeifertInvariants& a, const SeifertInvariants& b);

// Fibers from the link's tangle fractions as given, b = extra twists.
SeifertInvariants double_branched_cover(const MontesinosLink& k);

// At most three exceptional fibers after normalization.
bool is_small_sfs(const SeifertInvariants& m);

}  // namespace sfsurg
