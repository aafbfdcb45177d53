#pragma once

// Small dense vectors and matrices over either scalar backend. Dimensions in
// this library stay in the tens, so nothing here is blocked or vectorised.

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "reachkit/error.hpp"
#include "reachkit/rational.hpp"

namespace reachkit {

template <Scalar T>
using Vector = std::vector<T>;

template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  // Row-major nested initialiser; rows must all have the same length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      require_dimension(rows[i].size(), m.cols_, "matrix row");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector<T> column(std::size_t j) const {
    Vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Scalar T>
T dot(const Vector<T>& a, const Vector<T>& b) {
  require_dimension(b.size(), a.size(), "dot operand");
  T sum(0);
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

inline double norm2(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

template <Scalar T>
Vector<T> multiply(const Matrix<T>& m, const Vector<T>& v) {
  require_dimension(v.size(), m.cols(), "vector");
  Vector<T> out(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

// Computes mᵀv without materialising the transpose.
template <Scalar T>
Vector<T> multiply_transposed(const Matrix<T>& m, const Vector<T>& v) {
  require_dimension(v.size(), m.rows(), "vector");
  Vector<T> out(m.cols(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += m(i, j) * v[i];
  }
  return out;
}

template <Scalar T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  require_dimension(b.rows(), a.cols(), "matrix product operand");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

// Determinant by Gaussian elimination: partial pivoting for doubles, first
// non-zero pivot for exact rationals.
template <Scalar T>
T determinant(Matrix<T> m) {
  require_dimension(m.cols(), m.rows(), "square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    if constexpr (std::same_as<T, double>) {
      for (std::size_t r = col + 1; r < n; ++r) {
        if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
      }
    } else {
      while (pivot < n && m(pivot, col) == 0) ++pivot;
      if (pivot == n) return T(0);
    }
    if (m(pivot, col) == 0) return T(0);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    const T p = m(col, col);
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const T factor = m(r, col) / p;
      for (std::size_t j = col + 1; j < n; ++j) m(r, j) -= factor * m(col, j);
    }
  }
  return det;
}

}  // namespace reachkit
