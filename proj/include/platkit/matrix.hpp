#pragma once

#include <vector>

#include "platkit/laurent.hpp"

namespace platkit {

/// Dense row-major matrix over Z[var^±1].
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, const std::string& var = "t");
  static PolyMatrix identity(int n, const std::string& var = "t");

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  LaurentPolynomial& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const LaurentPolynomial& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  PolyMatrix without(int row, int col) const;  // pass -1 to keep all rows / cols

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<LaurentPolynomial> data_;
};

/// Fraction-free (Bareiss) determinant with exact division. 0x0 gives 1.
LaurentPolynomial determinant(PolyMatrix m);

}  // namespace platkit
