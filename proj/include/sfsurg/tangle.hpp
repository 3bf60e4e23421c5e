#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfsurg/slope.hpp"

namespace sfsurg {

// Endpoint pairing of a rational tangle, read off the parities of its
// fraction. Conway convention:
//   kZero      (even/odd)  NW-NE, SW-SE
//   kOne       (odd/odd)   NW-SE, NE-SW
//   kInfinity  (odd/even)  NW-SW, NE-SE
enum class ParityClass { kZero, kOne, kInfinity };

ParityClass parity_class(const ExtendedRational& fraction);

class RationalTangle {
 public:
  explicit RationalTangle(ExtendedRational fraction) : fraction_(std::move(fraction)) {}

  const ExtendedRational& fraction() const { return fraction_; }
  ParityClass parity() const { return parity_class(fraction_); }

 private:
  ExtendedRational fraction_;
};

// The closure of a horizontal chain of rational tangles followed by
// `extra_twists` horizontal half twists. Pretzel links are the case where
// every tangle is 1/q.
//
// The tangle list is kept exactly as given; normal_form() moves every
// integer part into the twist term so each fraction lies strictly in (0, 1).
class MontesinosLink {
 public:
  // Throws std::invalid_argument for an empty list or for a tangle that is
  // 1/0 or an integer: those degenerate to rational links or sums.
  MontesinosLink(std::vector<ExtendedRational> tangles, Integer extra_twists = 0);

  const std::vector<ExtendedRational>& tangles() const { return tangles_; }
  const Integer& extra_twists() const { return extra_twists_; }
  std::size_t length() const { return tangles_.size(); }

  MontesinosLink normal_form() const;
  bool is_normal() const;

  // The pretzel parameters when every tangle is 1/q, else nullopt.
  std::optional<std::vector<Integer>> pretzel_parameters() const;

  // "K(p1/q1, p2/q2, ...; e)".
  std::string to_string() const;

  friend bool operator==(const MontesinosLink&, const MontesinosLink&) = default;

 private:
  std::vector<ExtendedRational> tangles_;
  Integer extra_twists_;
};

// Pretzel (q1, ..., qk) with a trailing twist term. Throws
// std::invalid_argument if some |qi| < 2.
MontesinosLink pretzel(const std::vector<Integer>& qs, const Integer& trailing = 0);

MontesinosLink normalize(const MontesinosLink& k);

MontesinosLink mirror(const MontesinosLink& k);

enum class Chirality { kDirect, kMirrored };

// Normal forms agree up to cyclic rotation and reversal of the tangles.
bool equivalent_directly(const MontesinosLink& a, const MontesinosLink& b);

// Same, after mirroring b.
bool equivalent_via_mirror(const MontesinosLink& a, const MontesinosLink& b);

// nullopt when inequivalent; kDirect is preferred for amphichiral pairs.
std::optional<Chirality> equivalent(const MontesinosLink& a, const MontesinosLink& b);

// Number of link components, obtained by composing the parity-class endpoint
// pairings around the closed chain. The twist term enters as one more block
// of class kZero (even) or kOne (odd).
int component_count(const MontesinosLink& k);

bool is_knot(const MontesinosLink& k);

// A length-2 Montesinos tangle with two strands added, living in a solid
// torus. `kind` selects one of the two tubing patterns (0 or 1).
class TubedKnot {
 public:
  // Throws std::invalid_argument if kind is not 0/1, if a fraction is
  // degenerate, or if both denominators are even (not a knot).
  TubedKnot(int kind, ExtendedRational first, ExtendedRational second);

  int kind() const { return kind_; }
  const ExtendedRational& first() const { return first_; }
  const ExtendedRational& second() const { return second_; }

  TubedKnot mirror() const { return {kind_, -first_, -second_}; }

  // "K^a(p1/q1, p2/q2)".
  std::string to_string() const;

  friend bool operator==(const TubedKnot&, const TubedKnot&) = default;

 private:
  int kind_;
  ExtendedRational first_;
  ExtendedRational second_;
};

}  // namespace sfsurg
