#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamesym/groebner.hpp"
#include "tamesym/integer_matrix.hpp"
#include "tamesym/presentation.hpp"
#include "tamesym/subspace.hpp"

namespace tamesym {

/// Basis monomial: a path, or the idempotent of `start` when `word` is empty.
struct BasisPath {
  int start = 0;
  int end = 0;
  Word word;

  bool idempotent() const { return word.empty(); }
  std::size_t length() const { return word.size(); }
};

inline unsigned default_truncation_ceiling() {
  if (const char* env = std::getenv("TAMESYM_TRUNCATION_CEILING")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) return static_cast<unsigned>(v);
  }
  return 512;
}

struct BuildOptions {
  /// Largest truncation tried before giving up; the TAMESYM_TRUNCATION_CEILING
  /// environment variable overrides the default.
  unsigned ceiling = default_truncation_ceiling();
  std::optional<std::size_t> expected_dim;
};

/// Finite-dimensional quotient KQ/I with a path basis and structure constants.
template <ExactField F>
class Algebra {
 public:
  using E = typename F::Element;
  using Vec = std::vector<E>;
  using Sparse = std::vector<std::pair<std::uint32_t, E>>;

  const F& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisPath>& basis() const { return basis_; }
  const std::vector<std::size_t>& idempotent_indices() const { return idempotents_; }
  /// Basis position of each arrow, or npos when the arrow is not a basis word.
  const std::vector<std::size_t>& arrow_indices() const { return arrow_indices_; }
  const std::vector<Vec>& arrow_elements() const { return arrow_elements_; }
  unsigned truncation() const { return truncation_; }

  const Sparse& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec zero() const { return Vec(dim(), field_.zero()); }
  Vec unit_vector(std::size_t i) const {
    Vec v = zero();
    v[i] = field_.one();
    return v;
  }
  Vec one() const {
    Vec v = zero();
    for (auto i : idempotents_) v[i] = field_.one();
    return v;
  }

  Vec multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim())
      throw DimensionMismatch("element length differs from algebra dimension");
    Vec out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(y[j])) continue;
        const E c = x[i] * y[j];
        for (const auto& [k, v] : product(i, j)) out[k] += c * v;
      }
    }
    return out;
  }

  Vec power(Vec x, std::uint64_t e) const {
    Vec result = one();
    while (e > 0) {
      if (e & 1) result = multiply(result, x);
      e >>= 1;
      if (e) x = multiply(x, x);
    }
    return result;
  }

  std::string label(std::size_t i) const {
    const auto& b = basis_[i];
    if (b.idempotent()) return "e" + std::to_string(b.start);
    return word_name(quiver_, b.word);
  }

  /// Entry (i, j) = dim e_i A e_j.
  MatrixZ cartan_matrix() const {
    const auto n = static_cast<std::size_t>(quiver_.vertex_count);
    MatrixZ c(n, n);
    for (const auto& b : basis_) c.at(static_cast<std::size_t>(b.start), static_cast<std::size_t>(b.end)) += 1;
    return c;
  }

  /// Span of the non-idempotent basis words; the radical J.
  Subspace<F> radical() const {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!basis_[i].idempotent()) vs.push_back(unit_vector(i));
    return Subspace<F>::span(field_, dim(), vs);
  }

  /// dim J^0, dim J^1, ..., ending with 0; each power formed as J^i * J.
  std::vector<std::size_t> radical_power_dims() const {
    std::vector<std::size_t> dims{dim()};
    auto J = radical();
    auto current = J;
    while (current.dim() > 0) {
      dims.push_back(current.dim());
      EchelonBuilder<F> next(field_, dim());
      for (const auto& x : current.vectors())
        for (const auto& y : J.vectors()) next.insert(multiply(x, y));
      current = next.build();
    }
    dims.push_back(0);
    return dims;
  }

  /// {x : x a = 0 for every arrow a} (right = false: a x = 0).
  Subspace<F> annihilator_of_arrows(bool right) const {
    Matrix<F> m(field_, 0, dim());
    for (const auto& a : arrow_elements_) {
      std::vector<Vec> cols;
      for (std::size_t k = 0; k < dim(); ++k)
        cols.push_back(right ? multiply(unit_vector(k), a) : multiply(a, unit_vector(k)));
      for (std::size_t r = 0; r < dim(); ++r) {
        Vec row = zero();
        bool any = false;
        for (std::size_t k = 0; k < dim(); ++k) {
          row[k] = cols[k][r];
          any = any || !is_zero(row[k]);
        }
        if (any) m.append_row(row);
      }
    }
    return kernel(m);
  }

  /// Two-sided socle; throws when left and right annihilators differ.
  Subspace<F> socle() const {
    auto left = annihilator_of_arrows(true);
    auto right = annihilator_of_arrows(false);
    if (!(left == right))
      throw ConsistencyError("left and right socles differ (" + std::to_string(left.dim()) +
                             " vs " + std::to_string(right.dim()) + ")");
    return left;
  }

  bool check_unit() const {
    const Vec u = one();
    for (std::size_t i = 0; i < dim(); ++i) {
      const Vec b = unit_vector(i);
      if (!(multiply(u, b) == b) || !(multiply(b, u) == b)) return false;
    }
    return true;
  }

  /// Associativity on basis triples; every triple when dim^3 <= limit,
  /// otherwise a deterministic sample of `samples` triples.
  bool check_associativity(std::size_t limit = 216000, std::size_t samples = 1000) const {
    const std::size_t n = dim();
    auto triple = [&](std::size_t i, std::size_t j, std::size_t k) {
      Vec left = zero(), right = zero();
      for (const auto& [l, c] : product(i, j))
        for (const auto& [m, d] : product(l, k)) left[m] += c * d;
      for (const auto& [l, c] : product(j, k))
        for (const auto& [m, d] : product(i, l)) right[m] += c * d;
      return left == right;
    };
    if (n * n * n <= limit) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            if (!triple(i, j, k)) return false;
      return true;
    }
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return static_cast<std::size_t>(state % n);
    };
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t i = next(), j = next(), k = next();
      if (!triple(i, j, k)) return false;
    }
    return true;
  }

  /// b_i b_j = 0 whenever end(b_i) != start(b_j).
  bool check_grading() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        if (basis_[i].end != basis_[j].start && !product(i, j).empty()) return false;
    return true;
  }

  template <ExactField G>
  friend Algebra<G> build_algebra(const Presentation&, const G&, const BuildOptions&);

 private:
  F field_;
  Quiver quiver_;
  std::vector<BasisPath> basis_;
  std::vector<Sparse> table_;
  std::vector<std::size_t> idempotents_;
  std::vector<std::size_t> arrow_indices_;
  std::vector<Vec> arrow_elements_;
  unsigned truncation_ = 0;

  explicit Algebra(const F& field) : field_(field) {}
};

namespace detail {

template <ExactField F>
TruncatedGroebner<F> groebner_at(const Presentation& pres, const F& field, unsigned N) {
  TruncatedGroebner<F> gb(field, pres.quiver, N);
  for (const auto& rel : pres.effective_relations()) {
    typename TruncatedGroebner<F>::Poly p;
    for (const auto& t : rel.terms) {
      auto c = t.coeff.evaluate(field);
      if (is_zero(c)) continue;
      auto [slot, ins] = p.try_emplace(t.word, field.zero());
      slot->second += c;
      if (is_zero(slot->second)) p.erase(slot);
    }
    gb.add_relation(p);
  }
  gb.complete();
  return gb;
}

}  // namespace detail

/// Builds KQ/I. The truncation N starts at the presentation's hint and doubles
/// until the computation certifies itself: no normal word of length N-1 (so
/// J^(N-1) lies in I) and the same dimension at N+1.
template <ExactField F>
Algebra<F> build_algebra(const Presentation& pres, const F& field,
                         const BuildOptions& options = {}) {
  if (!(field.spec() == pres.field))
    throw FieldMismatch("presentation is over " + pres.field.to_string() + ", field is " +
                        field.spec().to_string());
  unsigned N = pres.truncation_hint.value_or(8);
  if (N < 2) N = 2;
  const unsigned ceiling = options.ceiling;
  std::optional<TruncatedGroebner<F>> gb;
  std::vector<Word> words;
  while (true) {
    gb.emplace(detail::groebner_at(pres, field, N));
    words = gb->normal_words();
    bool ok = words.empty() || words.back().size() + 1 < N;
    if (ok) {
      auto check = detail::groebner_at(pres, field, N + 1);
      ok = check.normal_words().size() == words.size();
    }
    if (ok) break;
    if (N >= ceiling)
      throw TruncationError("dimension did not stabilise up to truncation " +
                            std::to_string(ceiling));
    N = std::min(ceiling, 2 * N);
  }

  Algebra<F> alg(field);
  alg.quiver_ = pres.quiver;
  alg.truncation_ = N;
  for (int v = 0; v < pres.quiver.vertex_count; ++v) {
    alg.idempotents_.push_back(alg.basis_.size());
    alg.basis_.push_back({v, v, {}});
  }
  std::unordered_map<Word, std::size_t> index;
  for (const auto& w : words) {
    index[w] = alg.basis_.size();
    alg.basis_.push_back({word_start(pres.quiver, w), word_end(pres.quiver, w), w});
  }
  const std::size_t n = alg.basis_.size();
  if (options.expected_dim && *options.expected_dim != n)
    throw ConsistencyError("built dimension " + std::to_string(n) + " but expected " +
                           std::to_string(*options.expected_dim));

  auto to_sparse = [&](const typename TruncatedGroebner<F>::Poly& p) {
    typename Algebra<F>::Sparse out;
    for (const auto& [w, c] : p) {
      auto it = index.find(w);
      if (it == index.end()) throw ConsistencyError("normal form left the basis");
      out.emplace_back(static_cast<std::uint32_t>(it->second), c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };

  alg.table_.assign(n * n, {});
  std::unordered_map<Word, typename Algebra<F>::Sparse> cache;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = alg.basis_[i];
      const auto& b = alg.basis_[j];
      if (a.end != b.start) continue;
      auto& slot = alg.table_[i * n + j];
      if (a.idempotent()) {
        slot = {{static_cast<std::uint32_t>(j), field.one()}};
      } else if (b.idempotent()) {
        slot = {{static_cast<std::uint32_t>(i), field.one()}};
      } else {
        const Word w = a.word + b.word;
        auto it = cache.find(w);
        if (it == cache.end()) it = cache.emplace(w, to_sparse(gb->reduce_word(w))).first;
        slot = it->second;
      }
    }

  for (std::size_t a = 0; a < pres.quiver.arrows.size(); ++a) {
    const Word w(1, static_cast<char>(a));
    auto it = index.find(w);
    alg.arrow_indices_.push_back(it == index.end() ? static_cast<std::size_t>(-1) : it->second);
    auto v = alg.zero();
    for (const auto& [k, c] : to_sparse(gb->reduce_word(w))) v[k] = c;
    alg.arrow_elements_.push_back(std::move(v));
  }
  return alg;
}

template <ExactField F>
Algebra<F> build_algebra(const Presentation& pres, const F& field, unsigned ceiling) {
  BuildOptions o;
  o.ceiling = ceiling;
  return build_algebra(pres, field, o);
}

}  // namespace tamesym
