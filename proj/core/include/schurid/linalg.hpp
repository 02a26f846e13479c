#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace schurid {

/// Small dense row-major matrix for exact and ball-arithmetic scalars.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Fraction-free (Bareiss) determinant. Every division is exact in an
/// integral domain; over a field it is ordinary exact elimination.
template <class T>
T determinant(Matrix<T> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  T sign = T(1);
  T prev = T(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return T(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = v / prev;
      }
    }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return sign * d;
}

}  // namespace schurid
