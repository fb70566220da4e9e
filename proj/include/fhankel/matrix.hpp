#pragma once

// Minimal dense complex matrix used by the operator-matrix builders and the
// small SVD / eigenvalue routines.  Row-major; nothing clever.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fhankel {

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::complex<double>> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  std::complex<double>& at(std::size_t i, std::size_t j) {
    return a[i * cols + j];
  }
  const std::complex<double>& at(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

inline Matrix matmul(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
  Matrix r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      const std::complex<double> v = x.at(i, k);
      if (v == std::complex<double>{}) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        r.at(i, j) += v * y.at(k, j);
      }
    }
  }
  return r;
}

inline Matrix adjoint(const Matrix& x) {
  Matrix r(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) {
      r.at(j, i) = std::conj(x.at(i, j));
    }
  }
  return r;
}

inline double max_abs_diff(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    m = std::max(m, std::abs(x.a[i] - y.a[i]));
  }
  return m;
}

}  // namespace fhankel
