#ifndef WEILCENSUS_MATRIX_HPP
#define WEILCENSUS_MATRIX_HPP

#include "weilcensus/common.hpp"

#include <cstddef>
#include <vector>

namespace weilcensus {

/// Row-major dense matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Determinant by Bareiss fraction-free elimination.
Integer determinant(IntMatrix m);

/// Determinant over the rationals (Gaussian elimination).
Rational determinant(RatMatrix m);

/// Solves x * A = b for the row vector x (A square, nonsingular).
std::vector<Rational> solve_left(const RatMatrix& a, const std::vector<Rational>& b);

/// Elementary divisors d_1 | d_2 | ... | d_n of a square integer matrix.
/// A singular matrix yields trailing zeros.
std::vector<Integer> smith_elementary_divisors(IntMatrix m);

}  // namespace weilcensus

#endif
