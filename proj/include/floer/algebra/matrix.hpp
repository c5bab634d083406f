#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "floer/error.hpp"

namespace floer::algebra {

/// Dense row-major matrix over an exact field (in practice floer::Rational).
///
/// Elimination routines assume exact arithmetic: pivots are tested against
/// zero with operator==, so instantiating with a floating type gives
/// meaningless ranks.
template <typename Field>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Field(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Field> row_major)
      : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows_ * cols_) throw Error("shape_mismatch", "matrix data does not match its shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Field(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Field>& data() const noexcept { return data_; }

  Field& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const Field& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    assert(r0 + nr <= rows_ && c0 + nc <= cols_);
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  Matrix columns(const std::vector<std::size_t>& which) const {
    Matrix out(rows_, which.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < which.size(); ++j) out(i, j) = (*this)(i, which[j]);
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("shape_mismatch", "matrix product with incompatible shapes");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Field& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << "[";
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
      os << "]\n";
    }
    return os;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Field> data_;
};

/// Reduced row echelon form together with its pivot columns.
template <typename Field>
struct Echelon {
  Matrix<Field> reduced;
  std::vector<std::size_t> pivots;
};

template <typename Field>
Echelon<Field> row_reduce(Matrix<Field> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pick = row;
    while (pick < m.rows() && m(pick, col) == 0) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pick, j));
    const Field inv = Field(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Field factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Field>
std::size_t rank(const Matrix<Field>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return row_reduce(m).pivots.size();
}

/// Columns form a basis of the null space.
template <typename Field>
Matrix<Field> kernel_basis(const Matrix<Field>& m) {
  const auto [r, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix<Field> basis(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], f) = Field(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], f) = -r(i, free[f]);
  }
  return basis;
}

/// Index list of a maximal independent subset of the columns (leftmost first).
template <typename Field>
std::vector<std::size_t> independent_columns(const Matrix<Field>& m) {
  if (m.rows() == 0) return {};
  return row_reduce(m).pivots;
}

/// Inverse of a square matrix, or nullopt when singular.
template <typename Field>
std::optional<Matrix<Field>> inverse(const Matrix<Field>& m) {
  if (m.rows() != m.cols()) throw Error("shape_mismatch", "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Field> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Field(1);
  }
  auto [r, pivots] = row_reduce(std::move(aug));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return r.block(0, n, n, n);
}

}  // namespace floer::algebra
