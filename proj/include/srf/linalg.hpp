#pragma once

#include <cstddef>
#include <vector>

#include "srf/finite_field.hpp"

namespace srf {

// Dense row-major matrix over F_p.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> a_;
};

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row, in row order.
std::vector<std::size_t> rref(const Field& F, Matrix& m);

// Basis of the right kernel, one vector per free column (ascending), with
// a 1 in that free column.
std::vector<std::vector<Elem>> nullspace(const Field& F, Matrix m);

}  // namespace srf
