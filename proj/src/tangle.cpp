#include "sfsurg/tangle.hpp"

#include <algorithm>
#include <numeric>
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

bool is_odd(const Integer& n) { return bit_test(abs(n), 0); }

void require_proper_tangle(const ExtendedRational& f) {
  if (f.is_infinite()) {
    throw std::invalid_argument("degenerate tangle 1/0");
  }
  if (f.is_integer()) {
    throw std::invalid_argument("degenerate tangle " + f.to_string() + " (integral fraction)");
  }
}

// Union-find over tangle endpoints.
class Components {
 public:
  explicit Components(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void join(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  int count() {
    int n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      if (find(i) == i) ++n;
    }
    return n;
  }

 private:
  std::vector<std::size_t> parent_;
};

enum Corner : std::size_t { kNW = 0, kNE = 1, kSW = 2, kSE = 3 };

bool same_cyclic_dihedral(const std::vector<ExtendedRational>& a,
                          const std::vector<ExtendedRational>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool forward = true;
    bool backward = true;
    for (std::size_t i = 0; i < n && (forward || backward); ++i) {
      forward = forward && a[i] == b[(shift + i) % n];
      backward = backward && a[i] == b[(shift + n - i) % n];
    }
    if (forward || backward) return true;
  }
  return false;
}

}  // namespace

ParityClass parity_class(const ExtendedRational& fraction) {
  const bool num_odd = is_odd(fraction.num());
  const bool den_odd = is_odd(fraction.den());
  if (!num_odd) return ParityClass::kZero;
  return den_odd ? ParityClass::kOne : ParityClass::kInfinity;
}

MontesinosLink::MontesinosLink(std::vector<ExtendedRational> tangles, Integer extra_twists)
    : tangles_(std::move(tangles)), extra_twists_(std::move(extra_twists)) {
  if (tangles_.empty()) {
    throw std::invalid_argument("a Montesinos link needs at least one tangle");
  }
  for (const auto& t : tangles_) require_proper_tangle(t);
}

MontesinosLink MontesinosLink::normal_form() const {
  std::vector<ExtendedRational> reduced;
  reduced.reserve(tangles_.size());
  Integer extra = extra_twists_;
  for (const auto& t : tangles_) {
    Integer whole = floor_div(t.num(), t.den());
    extra += whole;
    reduced.emplace_back(t.num() - whole * t.den(), t.den());
  }
  return MontesinosLink(std::move(reduced), std::move(extra));
}

bool MontesinosLink::is_normal() const {
  return std::all_of(tangles_.begin(), tangles_.end(),
                     [](const ExtendedRational& t) { return t.num() > 0 && t.num() < t.den(); });
}

std::optional<std::vector<Integer>> MontesinosLink::pretzel_parameters() const {
  std::vector<Integer> qs;
  for (const auto& t : tangles_) {
    if (abs(t.num()) != 1) return std::nullopt;
    qs.push_back(t.num() * t.den());
  }
  return qs;
}

std::string MontesinosLink::to_string() const {
  std::ostringstream os;
  os << "K(";
  for (std::size_t i = 0; i < tangles_.size(); ++i) {
    if (i) os << ", ";
    os << tangles_[i];
  }
  os << "; " << extra_twists_ << ")";
  return os.str();
}

MontesinosLink pretzel(const std::vector<Integer>& qs, const Integer& trailing) {
  std::vector<ExtendedRational> tangles;
  tangles.reserve(qs.size());
  for (const auto& q : qs) {
    if (abs(q) < 2) {
      throw std::invalid_argument("degenerate pretzel strand " + q.str());
    }
    tangles.emplace_back(1, q);
  }
  return MontesinosLink(std::move(tangles), trailing);
}

MontesinosLink normalize(const MontesinosLink& k) { return k.normal_form(); }

MontesinosLink mirror(const MontesinosLink& k) {
  std::vector<ExtendedRational> negated;
  negated.reserve(k.length());
  for (const auto& t : k.tangles()) negated.push_back(-t);
  return MontesinosLink(std::move(negated), -k.extra_twists());
}

bool equivalent_directly(const MontesinosLink& a, const MontesinosLink& b) {
  const MontesinosLink na = a.normal_form();
  const MontesinosLink nb = b.normal_form();
  return na.extra_twists() == nb.extra_twists() && same_cyclic_dihedral(na.tangles(), nb.tangles());
}

bool equivalent_via_mirror(const MontesinosLink& a, const MontesinosLink& b) {
  return equivalent_directly(a, mirror(b));
}

std::optional<Chirality> equivalent(const MontesinosLink& a, const MontesinosLink& b) {
  if (equivalent_directly(a, b)) return Chirality::kDirect;
  if (equivalent_via_mirror(a, b)) return Chirality::kMirrored;
  return std::nullopt;
}

int component_count(const MontesinosLink& k) {
  std::vector<ParityClass> blocks;
  blocks.reserve(k.length() + 1);
  for (const auto& t : k.tangles()) blocks.push_back(parity_class(t));
  blocks.push_back(is_odd(k.extra_twists()) ? ParityClass::kOne : ParityClass::kZero);

  const std::size_t m = blocks.size();
  Components uf(4 * m);
  auto at = [](std::size_t block, Corner c) { return 4 * block + c; };
  for (std::size_t i = 0; i < m; ++i) {
    switch (blocks[i]) {
      case ParityClass::kZero:
        uf.join(at(i, kNW), at(i, kNE));
        uf.join(at(i, kSW), at(i, kSE));
        break;
      case ParityClass::kOne:
        uf.join(at(i, kNW), at(i, kSE));
        uf.join(at(i, kNE), at(i, kSW));
        break;
      case ParityClass::kInfinity:
        uf.join(at(i, kNW), at(i, kSW));
        uf.join(at(i, kNE), at(i, kSE));
        break;
    }
    // Right side of block i meets the left side of block i+1; the last
    // block wraps around to the first, which closes the chain.
    const std::size_t next = (i + 1) % m;
    uf.join(at(i, kNE), at(next, kNW));
    uf.join(at(i, kSE), at(next, kSW));
  }
  return uf.count();
}

bool is_knot(const MontesinosLink& k) { return component_count(k) == 1; }

TubedKnot::TubedKnot(int kind, ExtendedRational first, ExtendedRational second)
    : kind_(kind), first_(std::move(first)), second_(std::move(second)) {
  if (kind_ != 0 && kind_ != 1) {
    throw std::invalid_argument("tubed knot kind must be 0 or 1");
  }
  require_proper_tangle(first_);
  require_proper_tangle(second_);
  if (!is_odd(first_.den()) && !is_odd(second_.den())) {
    throw std::invalid_argument("tubed knot " + to_string() + " has two even denominators");
  }
}

std::string TubedKnot::to_string() const {
  return "K^" + std::to_string(kind_) + "(" + first_.to_string() + ", " + second_.to_string() + ")";
}

}  // namespace sfsurg
