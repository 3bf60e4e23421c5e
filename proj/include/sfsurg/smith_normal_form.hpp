#pragma once

#include <string>
#include <vector>

#include "sfsurg/slope.hpp"

namespace sfsurg {

// Dense integer matrix, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

// A finitely generated abelian group Z^free_rank + sum Z/d_i, with the
// invariant factors d_1 | d_2 | ... all greater than 1.
struct AbelianGroup {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  Integer torsion_order() const;
  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  bool is_finite() const { return free_rank == 0; }

  // "0", "Z", "Z/17", "Z + Z/2 + Z/4".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Diagonal entries d_1 | d_2 | ... of the Smith normal form, all >= 0,
// min(rows, cols) of them.
std::vector<Integer> smith_diagonal(IntegerMatrix m);

// Cokernel of the relation matrix: rows are relations, columns generators.
AbelianGroup cokernel(const IntegerMatrix& relations);

}  // namespace sfsurg
