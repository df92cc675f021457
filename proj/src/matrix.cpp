#include "platkit/matrix.hpp"

#include "platkit/error.hpp"

namespace platkit {

PolyMatrix::PolyMatrix(int rows, int cols, const std::string& var)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), LaurentPolynomial(var)) {
  if (rows < 0 || cols < 0) throw Error("precondition", "negative matrix dimension");
}

PolyMatrix PolyMatrix::identity(int n, const std::string& var) {
  PolyMatrix m(n, n, var);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPolynomial::constant(1, var);
  return m;
}

PolyMatrix PolyMatrix::without(int row, int col) const {
  PolyMatrix out(rows_ - (row >= 0 ? 1 : 0), cols_ - (col >= 0 ? 1 : 0));
  for (int r = 0, orow = 0; r < rows_; ++r) {
    if (r == row) continue;
    for (int c = 0, ocol = 0; c < cols_; ++c) {
      if (c == col) continue;
      out.at(orow, ocol++) = at(r, c);
    }
    ++orow;
  }
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("precondition", "matrix dimension mismatch");
  PolyMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const LaurentPolynomial& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const LaurentPolynomial& bkj = b.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

LaurentPolynomial determinant(PolyMatrix m) {
  if (m.rows() != m.cols()) throw Error("precondition", "determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return LaurentPolynomial::constant(1, "t");
  bool negate = false;
  LaurentPolynomial prev = LaurentPolynomial::constant(1, "t");
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!m.at(r, k).is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return LaurentPolynomial("t");
      for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(swap_row, c));
      negate = !negate;
    }
    const LaurentPolynomial pivot = m.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const LaurentPolynomial lead = m.at(i, k);
      for (int j = k + 1; j < n; ++j) {
        LaurentPolynomial v = m.at(i, j) * pivot;
        if (!lead.is_zero() && !m.at(k, j).is_zero()) v -= lead * m.at(k, j);
        auto q = divide_exact(v, prev);
        if (!q) throw std::logic_error("Bareiss step was not exact");
        m.at(i, j) = std::move(*q);
      }
      m.at(i, k) = LaurentPolynomial("t");
    }
    prev = pivot;
  }
  LaurentPolynomial d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace platkit
