#include "spm/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace spm {

namespace {

Rational small_determinant(const DenseMatrix& m) {
  switch (m.size()) {
    case 0:
      return 1;
    case 1:
      return m[0][0];
    case 2:
      return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    default:
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
}

}  // namespace

Rational determinant(DenseMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n <= 3) return small_determinant(m);

  // Bareiss: after step k every entry below/right of the pivot is a k+1 order
  // minor, and the division by the previous pivot is exact.
  Rational sign = 1;
  Rational previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(m[swap_row][k]) == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

DenseMatrix inverse(DenseMatrix m) {
  const std::size_t n = m.size();
  DenseMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("matrix is singular");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Rational scale = 1 / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(m[i][col]) == 0) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= factor * m[col][j];
        inv[i][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

std::size_t rank(DenseMatrix m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m[i][col]) == 0) continue;
      const Rational factor = m[i][col] / m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace spm
