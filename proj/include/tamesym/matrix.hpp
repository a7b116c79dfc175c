#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "tamesym/errors.hpp"
#include "tamesym/field.hpp"

namespace tamesym {

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  using E = typename F::Element;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix from_rows(const F& field, std::size_t cols,
                          const std::vector<std::vector<E>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_ints(const F& field,
                          const std::vector<std::vector<long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  E& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const E& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<E> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  void append_row(const std::vector<E>& r) {
    if (r.size() != cols_) throw DimensionMismatch("row length differs from cols");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const E& a = at(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (!is_zero(o.at(k, j))) out.at(i, j) += a * o.at(k, j);
      }
    return out;
  }

  std::vector<E> apply(const std::vector<E>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("vector length differs from cols");
    std::vector<E> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero(at(i, j)) && !is_zero(v[j])) out[i] += at(i, j) * v[j];
    return out;
  }

  /// Throws FieldMismatch when an entry belongs to another field.
  void check_field() const {
    for (const auto& e : data_)
      if (!field_.owns(e)) throw FieldMismatch("matrix entry from a different field");
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<E> data_;
};

template <ExactField F>
struct RrefResult {
  std::size_t rank = 0;
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
template <ExactField F>
RrefResult<F> rref(Matrix<F> m) {
  m.check_field();
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m.at(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    const auto inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      const auto factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m.at(r, j))) m.at(i, j) -= factor * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {r, std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/// Inverse of a square matrix; throws when singular.
template <ExactField F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.field().one();
  }
  auto res = rref(std::move(aug));
  if (res.rank < n || (n > 0 && res.pivots[n - 1] != n - 1))
    throw DualBasisFailure("matrix is singular");
  Matrix<F> out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = res.reduced.at(i, n + j);
  return out;
}

}  // namespace tamesym
