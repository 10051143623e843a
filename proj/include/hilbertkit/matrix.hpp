#pragma once

// Dense matrices with exact elimination: Bareiss over Z, Gauss-Jordan over Q, and a
// division-free expansion for arbitrary commutative rings.

#include "hilbertkit/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hilbertkit {

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

/// Fraction-free determinant (Bareiss); every division is exact.
inline Integer determinant(ZMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Rank of an integer matrix by fraction-free elimination.
inline std::size_t rank(ZMatrix m) {
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer t = m(i, j) * m(r, c) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

/// Reduced row echelon form over Q; returns pivot columns.
inline std::vector<std::size_t> rref_in_place(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(QMatrix m) { return rref_in_place(m).size(); }

inline Rational determinant(QMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(k, p);
      det = -det;
    }
    det *= m(k, k);
    Rational inv = 1 / m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

/// Basis of the right null space {v : m v = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> kernel_basis(QMatrix m) {
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a x = b for square nonsingular a (b may have several columns).
inline QMatrix solve(const QMatrix& a, const QMatrix& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  QMatrix aug(n, n + b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  QMatrix x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
  return x;
}

inline QMatrix inverse(const QMatrix& a) {
  return solve(a, QMatrix::identity(a.rows(), Rational(0), Rational(1)));
}

/// Determinant over an arbitrary commutative ring without division: Laplace
/// expansion along rows, memoized on the set of columns already used. O(2^n n).
template <class R>
R determinant_division_free(const Matrix<R>& m, const R& zero, const R& one) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return one;
  if (n > 20) throw std::invalid_argument("matrix too large for division-free expansion");
  // minors[mask] = det of the submatrix on the last popcount(mask) rows and columns in mask.
  std::unordered_map<std::uint32_t, R> minors;
  minors.emplace(0u, one);
  std::vector<std::uint32_t> layer{0u};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t row = n - 1 - k;
    std::unordered_map<std::uint32_t, R> next;
    for (std::uint32_t mask : layer) {
      const R& sub = minors.at(mask);
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        if (m(row, c) == zero) continue;
        std::uint32_t nm = mask | (1u << c);
        // sign from the position of c among the columns of nm
        std::size_t before = 0;
        for (std::size_t j = 0; j < c; ++j)
          if (nm & (1u << j)) ++before;
        R term = m(row, c) * sub;
        auto it = next.find(nm);
        if (it == next.end()) {
          next.emplace(nm, before % 2 ? zero - term : term);
        } else if (before % 2) {
          it->second = it->second - term;
        } else {
          it->second = it->second + term;
        }
      }
    }
    minors = std::move(next);
    layer.clear();
    for (const auto& [mask, v] : minors) layer.push_back(mask);
  }
  auto it = minors.find((n == 32) ? 0xffffffffu : ((1u << n) - 1));
  return it == minors.end() ? zero : it->second;
}

}  // namespace hilbertkit
