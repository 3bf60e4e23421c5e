#include "sfsurg/smith_normal_form.hpp"

#include <algorithm>
#include <utility>

namespace sfsurg {

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// Moves the smallest nonzero |entry| of the trailing submatrix to (t, t).
// Returns false when that submatrix is zero.
bool place_pivot(IntegerMatrix& m, std::size_t t) {
  std::size_t best_r = t, best_c = t;
  bool found = false;
  for (std::size_t r = t; r < m.rows(); ++r) {
    for (std::size_t c = t; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      if (!found || abs(m(r, c)) < abs(m(best_r, best_c))) {
        best_r = r;
        best_c = c;
        found = true;
      }
    }
  }
  if (!found) return false;
  swap_rows(m, t, best_r);
  swap_cols(m, t, best_c);
  return true;
}

}  // namespace

std::vector<Integer> smith_diagonal(IntegerMatrix m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (!place_pivot(m, t)) break;
    while (true) {
      bool clean = true;
      // Reduce column t below the pivot and row t right of it. Any nonzero
      // remainder is smaller than the pivot, so re-pivoting terminates.
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        Integer q = m(r, t) / m(t, t);
        for (std::size_t c = t; c < m.cols(); ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        Integer q = m(t, c) / m(t, t);
        for (std::size_t r = t; r < m.rows(); ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) {
        place_pivot(m, t);
        continue;
      }
      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divisible = true;
      for (std::size_t r = t + 1; r < m.rows() && divisible; ++r) {
        for (std::size_t c = t + 1; c < m.cols(); ++c) {
          if (m(r, c) % m(t, t) != 0) {
            for (std::size_t cc = t; cc < m.cols(); ++cc) m(t, cc) += m(r, cc);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
  }
  std::vector<Integer> diagonal;
  diagonal.reserve(n);
  for (std::size_t t = 0; t < n; ++t) diagonal.push_back(abs(m(t, t)));
  return diagonal;
}

AbelianGroup cokernel(const IntegerMatrix& relations) {
  AbelianGroup group;
  const std::vector<Integer> diagonal = smith_diagonal(relations);
  for (const auto& d : diagonal) {
    if (d == 0) {
      ++group.free_rank;
    } else if (d > 1) {
      group.torsion.push_back(d);
    }
  }
  // Generators with no relation at all contribute free summands too.
  if (relations.cols() > diagonal.size()) group.free_rank += relations.cols() - diagonal.size();
  std::sort(group.torsion.begin(), group.torsion.end());
  return group;
}

Integer AbelianGroup::torsion_order() const {
  Integer order = 1;
  for (const auto& d : torsion) order *= d;
  return order;
}

std::string AbelianGroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < free_rank; ++i) out += out.empty() ? "Z" : " + Z";
  for (const auto& d : torsion) out += (out.empty() ? "Z/" : " + Z/") + d.str();
  return out.empty() ? "0" : out;
}

}  // namespace sfsurg
