#pragma once

#include <cstddef>
#include <vector>

#include "tamesym/matrix.hpp"

namespace tamesym {

/// Subspace of F^n held in reduced row-echelon form, so equal subspaces have
/// identical records.
template <ExactField F>
class Subspace {
 public:
  using E = typename F::Element;

  Subspace(const F& field, std::size_t ambient)
      : field_(field), ambient_(ambient), basis_(field, 0, ambient) {}

  static Subspace span(const F& field, std::size_t ambient,
                       const std::vector<std::vector<E>>& vectors) {
    return from_matrix(Matrix<F>::from_rows(field, ambient, vectors));
  }

  static Subspace from_matrix(const Matrix<F>& m) {
    auto res = rref(m);
    Subspace s(m.field(), m.cols());
    for (std::size_t i = 0; i < res.rank; ++i) s.basis_.append_row(res.reduced.row(i));
    s.pivots_ = std::move(res.pivots);
    return s;
  }

  static Subspace full(const F& field, std::size_t ambient) {
    return from_matrix(Matrix<F>::identity(field, ambient));
  }

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<E> vector(std::size_t i) const { return basis_.row(i); }
  std::vector<std::vector<E>> vectors() const {
    std::vector<std::vector<E>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  /// Remainder of v after eliminating the pivot coordinates; zero iff v lies
  /// in the subspace.
  std::vector<E> reduce(std::vector<E> v) const {
    if (v.size() != ambient_) throw AmbientMismatch("vector length differs from ambient");
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const E c = v[pivots_[i]];
      if (is_zero(c)) continue;
      for (std::size_t j = pivots_[i]; j < ambient_; ++j)
        if (!is_zero(basis_.at(i, j))) v[j] -= c * basis_.at(i, j);
    }
    return v;
  }

  bool contains(const std::vector<E>& v) const {
    for (const auto& x : reduce(v))
      if (!is_zero(x)) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.vector(i))) return false;
    return true;
  }

  /// Coordinates of v (assumed to lie in the subspace) in the echelon basis.
  std::vector<E> coordinates(const std::vector<E>& v) const {
    std::vector<E> out;
    out.reserve(dim());
    for (auto p : pivots_) out.push_back(v[p]);
    return out;
  }

  std::vector<E> from_coordinates(const std::vector<E>& c) const {
    std::vector<E> v(ambient_, field_.zero());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(c[i])) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!is_zero(basis_.at(i, j))) v[j] += c[i] * basis_.at(i, j);
    }
    return v;
  }

  void check_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_)
      throw AmbientMismatch("subspaces of different ambient dimension");
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
  }

 private:
  F field_;
  std::size_t ambient_;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
template <ExactField F>
Subspace<F> kernel(const Matrix<F>& m) {
  auto res = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : res.pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::Element>> vecs;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Element> v(n, m.field().zero());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < res.rank; ++i)
      v[res.pivots[i]] = -res.reduced.at(i, free);
    vecs.push_back(std::move(v));
  }
  return Subspace<F>::span(m.field(), n, vecs);
}

/// {v : v m = 0}, i.e. linear relations among the rows of m.
template <ExactField F>
Subspace<F> left_kernel(const Matrix<F>& m) {
  return kernel(m.transpose());
}

template <ExactField F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  a.check_ambient(b);
  auto m = a.basis();
  for (std::size_t i = 0; i < b.dim(); ++i) m.append_row(b.vector(i));
  return Subspace<F>::from_matrix(m);
}

/// Annihilator of s under the standard pairing: {v : <v, s> = 0}.
template <ExactField F>
Subspace<F> annihilator(const Subspace<F>& s) {
  return kernel(s.basis());
}

template <ExactField F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  a.check_ambient(b);
  auto m = annihilator(a).basis();
  const auto kb = annihilator(b);
  for (std::size_t i = 0; i < kb.dim(); ++i) m.append_row(kb.vector(i));
  return kernel(m);
}

/// Incremental span with rank tracking, for building subspaces vector by
/// vector without re-running elimination each time.
template <ExactField F>
class EchelonBuilder {
 public:
  using E = typename F::Element;

  EchelonBuilder(const F& field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  /// Returns true when v enlarged the span.
  bool insert(std::vector<E> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const E c = v[pivots_[i]];
      if (is_zero(c)) continue;
      for (std::size_t j = pivots_[i]; j < ambient_; ++j)
        if (!is_zero(rows_[i][j])) v[j] -= c * rows_[i][j];
    }
    std::size_t p = 0;
    while (p < ambient_ && is_zero(v[p])) ++p;
    if (p == ambient_) return false;
    const E inv = field_.inv(v[p]);
    for (std::size_t j = p; j < ambient_; ++j) v[j] = v[j] * inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  bool contains(std::vector<E> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const E c = v[pivots_[i]];
      if (is_zero(c)) continue;
      for (std::size_t j = pivots_[i]; j < ambient_; ++j)
        if (!is_zero(rows_[i][j])) v[j] -= c * rows_[i][j];
    }
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

  std::size_t dim() const { return rows_.size(); }

  Subspace<F> build() const { return Subspace<F>::span(field_, ambient_, rows_); }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<std::vector<E>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace tamesym
