#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tamesym/errors.hpp"
#include "tamesym/field_spec.hpp"

namespace tamesym {

class MatrixZ {
 public:
  MatrixZ() = default;
  MatrixZ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  MatrixZ(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged integer matrix");
      for (long x : r) data_.emplace_back(x);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  MatrixZ transpose() const {
    MatrixZ t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  mpz_class total() const {
    mpz_class s = 0;
    for (const auto& x : data_) s += x;
    return s;
  }

  std::vector<std::vector<long>> to_longs() const {
    std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j).get_si();
    return out;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) out += ",";
      if (rows_ > 1) out += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ",";
        out += at(i, j).get_str();
      }
      if (rows_ > 1) out += "]";
    }
    return out + "]";
  }

  bool operator==(const MatrixZ& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithForm {
  std::vector<mpz_class> divisors;  // nonzero diagonal entries, positive
  std::size_t rank = 0;
  std::size_t cokernel_free_rank = 0;
};

/// Diagonalises by unimodular row and column operations. The pivot is always
/// the entry of least nonzero absolute value (first in row-major order).
inline SmithForm smith_normal_form(MatrixZ m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    while (true) {
      std::size_t pi = R, pj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j) {
          if (m.at(i, j) == 0) continue;
          if (pi == R || abs(m.at(i, j)) < abs(m.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == R) goto done;
      for (std::size_t j = 0; j < C; ++j) std::swap(m.at(t, j), m.at(pi, j));
      for (std::size_t i = 0; i < R; ++i) std::swap(m.at(i, t), m.at(i, pj));
      bool clean = true;
      const mpz_class piv = m.at(t, t);
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m.at(i, t) == 0) continue;
        const mpz_class q = m.at(i, t) / piv;  // truncating division
        for (std::size_t j = t; j < C; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m.at(t, j) == 0) continue;
        const mpz_class q = m.at(t, j) / piv;
        for (std::size_t i = t; i < R; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the rest of the block; otherwise fold in the
      // offending row and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (m.at(i, j) % piv != 0) {
            for (std::size_t jj = t; jj < C; ++jj) m.at(t, jj) += m.at(i, jj);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
done:
  SmithForm out;
  for (std::size_t i = 0; i < std::min(R, C); ++i)
    if (m.at(i, i) != 0) out.divisors.push_back(abs(m.at(i, i)));
  out.rank = out.divisors.size();
  out.cokernel_free_rank = R - out.rank;
  return out;
}

inline std::size_t rank_mod_p(const MatrixZ& m, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<std::uint64_t>> a(R, std::vector<std::uint64_t>(C));
  const mpz_class mp(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      mpz_class r = m.at(i, j) % mp;
      if (r < 0) r += mp;
      a[i][j] = r.get_ui();
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t piv = rank;
    while (piv < R && a[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = poly_mod_p::inv_mod(static_cast<std::uint32_t>(a[rank][c]),
                                                  static_cast<std::uint32_t>(p));
    for (std::size_t i = rank + 1; i < R; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c] * inv % p;
      for (std::size_t j = c; j < C; ++j) a[i][j] = (a[i][j] + p - f * a[rank][j] % p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Rank over Q.
inline std::size_t rank_over_q(const MatrixZ& m) {
  return m.rows() - smith_normal_form(m).cokernel_free_rank;
}

/// Rank of m over a field of the given characteristic (0 for Q).
inline std::size_t rank_in_characteristic(const MatrixZ& m, std::uint32_t characteristic) {
  return characteristic == 0 ? rank_over_q(m) : rank_mod_p(m, characteristic);
}

/// Fraction-free elimination; exact division at every step.
inline mpz_class bareiss_determinant(MatrixZ m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = v;
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

}  // namespace tamesym
