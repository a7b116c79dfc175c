#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tamesym/additive.hpp"
#include "tamesym/algebra.hpp"
#include "tamesym/integer_matrix.hpp"
#include "tamesym/subspace.hpp"

namespace tamesym {

/// Commutative algebra on an explicit basis; the radical is carried along
/// because every algebra here arrives as a subquotient of a basic algebra.
template <ExactField F>
class CommAlgebra {
 public:
  using E = typename F::Element;
  using Vec = std::vector<E>;

  CommAlgebra(const F& field, std::vector<std::string> labels, std::vector<Vec> table, Vec one,
              Subspace<F> radical)
      : field_(field),
        labels_(std::move(labels)),
        table_(std::move(table)),
        one_(std::move(one)),
        radical_(std::move(radical)) {}

  const F& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& one() const { return one_; }
  const Subspace<F>& radical() const { return radical_; }
  const Vec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec zero() const { return Vec(dim(), field_.zero()); }
  Vec unit_vector(std::size_t i) const {
    Vec v = zero();
    v[i] = field_.one();
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
        const Vec& p = product(i, j);
        for (std::size_t k = 0; k < dim(); ++k)
          if (!is_zero(p[k])) out[k] += c * p[k];
      }
    }
    return out;
  }

  Vec power(Vec x, std::uint64_t e) const {
    Vec result = one_;
    while (e > 0) {
      if (e & 1) result = multiply(result, x);
      e >>= 1;
      if (e) x = multiply(x, x);
    }
    return result;
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (!(product(i, j) == product(j, i))) return false;
    return true;
  }

  /// Span of products s * t for s in a, t in b.
  Subspace<F> product_space(const Subspace<F>& a, const Subspace<F>& b) const {
    EchelonBuilder<F> out(field_, dim());
    for (const auto& s : a.vectors())
      for (const auto& t : b.vectors()) out.insert(multiply(s, t));
    return out.build();
  }

  /// {x : x s = 0 for all s in the subspace}.
  Subspace<F> annihilator_of(const Subspace<F>& s) const {
    Matrix<F> m(field_, 0, dim());
    for (const auto& v : s.vectors()) {
      std::vector<Vec> cols;
      for (std::size_t k = 0; k < dim(); ++k) cols.push_back(multiply(unit_vector(k), v));
      for (std::size_t r = 0; r < dim(); ++r) {
        Vec row = zero();
        for (std::size_t k = 0; k < dim(); ++k) row[k] = cols[k][r];
        m.append_row(row);
      }
    }
    return kernel(m);
  }

 private:
  F field_;
  std::vector<std::string> labels_;
  std::vector<Vec> table_;
  Vec one_;
  Subspace<F> radical_;
};

/// Subspace `sub` of S re-expressed in the echelon coordinates of S.
template <ExactField F>
Subspace<F> in_coordinates(const Subspace<F>& S, const Subspace<F>& sub) {
  if (!S.contains(sub)) throw NotAnIdeal("subspace is not contained in the ambient algebra");
  std::vector<std::vector<typename F::Element>> vs;
  for (const auto& v : sub.vectors()) vs.push_back(S.coordinates(v));
  return Subspace<F>::span(S.field(), S.dim(), vs);
}

/// The subalgebra S of A (closed under multiplication, containing 1) as a
/// commutative algebra on the echelon basis of S.
template <ExactField F>
CommAlgebra<F> restrict_to(const Algebra<F>& a, const Subspace<F>& S) {
  using Vec = std::vector<typename F::Element>;
  const std::size_t d = S.dim();
  const auto vs = S.vectors();
  std::vector<Vec> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec p = a.multiply(vs[i], vs[j]);
      if (!S.contains(p)) throw ConsistencyError("subspace is not closed under multiplication");
      table[i * d + j] = S.coordinates(p);
    }
  if (!S.contains(a.one())) throw ConsistencyError("subspace does not contain the unit");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    std::string l;
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (is_zero(vs[i][k])) continue;
      if (!l.empty()) l += "+";
      if (!(vs[i][k] == a.field().one())) l += a.field().format(vs[i][k]) + "*";
      l += a.label(k);
    }
    labels.push_back(l);
  }
  auto rad = in_coordinates(S, intersect(S, a.radical()));
  return CommAlgebra<F>(a.field(), std::move(labels), std::move(table), S.coordinates(a.one()),
                        std::move(rad));
}

/// A commutative algebra built from a presentation, e.g. a displayed centre model.
template <ExactField F>
CommAlgebra<F> as_comm(const Algebra<F>& a) {
  auto c = restrict_to(a, Subspace<F>::full(a.field(), a.dim()));
  if (!c.is_commutative()) throw ConsistencyError("algebra is not commutative");
  return c;
}

/// z / ideal on the complement spanned by the non-pivot coordinates of the ideal.
template <ExactField F>
CommAlgebra<F> quotient_comm(const CommAlgebra<F>& z, const Subspace<F>& ideal) {
  using Vec = std::vector<typename F::Element>;
  if (ideal.ambient_dim() != z.dim()) throw AmbientMismatch("ideal lives in another algebra");
  for (const auto& v : ideal.vectors())
    for (std::size_t i = 0; i < z.dim(); ++i)
      if (!ideal.contains(z.multiply(z.unit_vector(i), v)))
        throw NotAnIdeal("subspace is not closed under multiplication by the algebra");
  std::vector<bool> pivot(z.dim(), false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < z.dim(); ++i)
    if (!pivot[i]) keep.push_back(i);
  auto project = [&](const Vec& v) {
    const Vec r = ideal.reduce(v);
    Vec out;
    for (auto k : keep) out.push_back(r[k]);
    return out;
  };
  const std::size_t d = keep.size();
  std::vector<Vec> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table[i * d + j] = project(z.product(keep[i], keep[j]));
  std::vector<std::string> labels;
  for (auto k : keep) labels.push_back(z.labels()[k]);
  std::vector<Vec> rad;
  for (const auto& r : z.radical().vectors()) rad.push_back(project(r));
  return CommAlgebra<F>(z.field(), std::move(labels), std::move(table), project(z.one()),
                        Subspace<F>::span(z.field(), d, rad));
}

/// Isomorphism-invariant profile of a commutative algebra. Equal algebras give
/// equal fingerprints; the converse is not claimed.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> loewy_dims;
  std::vector<std::size_t> socle_series_dims;
  std::size_t min_generators = 0;
  std::uint32_t characteristic = 0;
  unsigned extension_degree = 1;
  std::vector<std::size_t> frobenius_kernel_dims;
  std::vector<std::size_t> frobenius_image_dims;

  bool operator==(const Fingerprint&) const = default;

  std::string to_string() const {
    auto seq = [](const std::vector<std::size_t>& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + ")";
    };
    std::string s = "dim " + std::to_string(dim) + " loewy " + seq(loewy_dims) + " soc " +
                    seq(socle_series_dims) + " gens " + std::to_string(min_generators);
    if (characteristic != 0) s += " frob_ker " + seq(frobenius_kernel_dims) + " frob_im " + seq(frobenius_image_dims);
    return s;
  }
};

/// Least L with rad^L = 0.
template <ExactField F>
std::size_t loewy_length(const CommAlgebra<F>& z) {
  std::size_t L = 1;
  auto cur = z.radical();
  while (cur.dim() > 0) {
    cur = z.product_space(cur, z.radical());
    ++L;
  }
  return L;
}

namespace detail {

// Images of a prime-field basis of `domain` under x -> x^(p^j), as rows over
// the prime field.
inline Matrix<GaloisField> frobenius_images(const CommAlgebra<GaloisField>& z,
                                            const Subspace<GaloisField>& domain, unsigned j) {
  const GaloisField& big = z.field();
  const GaloisField prime(big.characteristic());
  std::uint64_t e = 1;
  for (unsigned i = 0; i < j; ++i) e *= big.characteristic();
  const auto gens = prime_field_basis(big, domain.dim());
  Matrix<GaloisField> m(prime, 0, z.dim() * big.degree());
  for (const auto& c : gens)
    m.append_row(restrict_scalars(big, prime, z.power(domain.from_coordinates(c), e)));
  return m;
}

}  // namespace detail

template <ExactField F>
Fingerprint fingerprint(const CommAlgebra<F>& z) {
  Fingerprint fp;
  fp.dim = z.dim();
  fp.characteristic = z.field().characteristic();
  fp.extension_degree = z.field().degree();
  fp.loewy_dims.push_back(z.dim());
  std::vector<Subspace<F>> powers;
  auto cur = z.radical();
  while (cur.dim() > 0) {
    fp.loewy_dims.push_back(cur.dim());
    powers.push_back(cur);
    cur = z.product_space(cur, z.radical());
  }
  fp.loewy_dims.push_back(0);
  for (const auto& p : powers) fp.socle_series_dims.push_back(z.annihilator_of(p).dim());
  fp.min_generators = fp.loewy_dims[1] - (fp.loewy_dims.size() > 2 ? fp.loewy_dims[2] : 0);
  if constexpr (is_finite_field_v<F>) {
    const auto full = Subspace<F>::full(z.field(), z.dim());
    for (unsigned j = 1; j <= 3; ++j) {
      fp.frobenius_kernel_dims.push_back(
          kernel_additive_map(detail::frobenius_images(z, z.radical(), j)).dim());
      fp.frobenius_image_dims.push_back(rank(detail::frobenius_images(z, full, j)));
    }
  }
  return fp;
}

template <ExactField F>
struct Centre {
  Subspace<F> subspace;
  CommAlgebra<F> algebra;
};

/// Kernel of x -> x g - g x over the idempotents and arrows.
template <ExactField F>
Centre<F> centre(const Algebra<F>& a) {
  using Vec = std::vector<typename F::Element>;
  std::vector<Vec> gens;
  for (auto i : a.idempotent_indices()) gens.push_back(a.unit_vector(i));
  for (const auto& g : a.arrow_elements()) gens.push_back(g);
  Matrix<F> m(a.field(), 0, a.dim());
  for (const auto& g : gens) {
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Vec b = a.unit_vector(k);
      Vec c = a.multiply(b, g);
      const Vec d = a.multiply(g, b);
      for (std::size_t r = 0; r < a.dim(); ++r) c[r] -= d[r];
      cols.push_back(std::move(c));
    }
    for (std::size_t r = 0; r < a.dim(); ++r) {
      Vec row = a.zero();
      bool any = false;
      for (std::size_t k = 0; k < a.dim(); ++k) {
        row[k] = cols[k][r];
        any = any || !is_zero(row[k]);
      }
      if (any) m.append_row(row);
    }
  }
  auto Z = kernel(m);
  auto comm = restrict_to(a, Z);
  return {std::move(Z), std::move(comm)};
}

/// Span of b_i b_j - b_j b_i.
template <ExactField F>
Subspace<F> commutator_space(const Algebra<F>& a) {
  EchelonBuilder<F> out(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const auto& p = a.product(i, j);
      const auto& q = a.product(j, i);
      if (p.empty() && q.empty()) continue;
      auto v = a.zero();
      for (const auto& [k, c] : p) v[k] += c;
      for (const auto& [k, c] : q) v[k] -= c;
      out.insert(std::move(v));
    }
  return out.build();
}

template <ExactField F>
struct LinearForm {
  std::vector<typename F::Element> coeffs;

  typename F::Element operator()(const std::vector<typename F::Element>& x) const {
    auto s = coeffs.at(0) - coeffs.at(0);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_zero(x[i]) && !is_zero(coeffs[i])) s += x[i] * coeffs[i];
    return s;
  }
};

/// Gram matrix (lambda(b_i b_j)).
template <ExactField F>
Matrix<F> gram_matrix(const Algebra<F>& a, const LinearForm<F>& lambda) {
  Matrix<F> g(a.field(), a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.product(i, j))
        if (!is_zero(lambda.coeffs[k])) g.at(i, j) += c * lambda.coeffs[k];
  return g;
}

/// A nondegenerate form vanishing on [A, A]. Candidates are the echelon basis
/// of the solution space in order, then their sum, then a greedy combination.
template <ExactField F>
LinearForm<F> symmetrizing_form(const Algebra<F>& a, const Subspace<F>& commutators) {
  const auto sol = annihilator(commutators);
  const std::size_t n = a.dim();
  auto nondegenerate = [&](const LinearForm<F>& l) { return rank(gram_matrix(a, l)) == n; };
  std::vector<LinearForm<F>> cands;
  for (const auto& v : sol.vectors()) cands.push_back({v});
  for (const auto& c : cands)
    if (nondegenerate(c)) return c;
  if (cands.empty()) throw NotSymmetric("no form vanishes on the commutator space");
  LinearForm<F> total{a.zero()};
  for (const auto& c : cands)
    for (std::size_t k = 0; k < n; ++k) total.coeffs[k] += c.coeffs[k];
  if (nondegenerate(total)) return total;
  LinearForm<F> acc{a.zero()};
  std::size_t best = 0;
  for (const auto& c : cands) {
    LinearForm<F> trial = acc;
    for (std::size_t k = 0; k < n; ++k) trial.coeffs[k] += c.coeffs[k];
    const std::size_t r = rank(gram_matrix(a, trial));
    if (r > best) {
      best = r;
      acc = trial;
    }
  }
  if (best == n) return acc;
  throw NotSymmetric("no nondegenerate symmetrizing form found (best Gram rank " +
                     std::to_string(best) + " of " + std::to_string(n) + ")");
}

template <ExactField F>
LinearForm<F> symmetrizing_form(const Algebra<F>& a) {
  return symmetrizing_form(a, commutator_space(a));
}

/// Image of x -> sum_i b_i x b^i for lambda-dual bases. Checks containment in
/// the socle and the centre, and that the dimension equals the rank of the
/// Cartan matrix in the field's characteristic.
template <ExactField F>
Subspace<F> higman_ideal(const Algebra<F>& a, const LinearForm<F>& lambda,
                         const Subspace<F>& centre_space, const Subspace<F>& socle_space) {
  using Vec = std::vector<typename F::Element>;
  const std::size_t n = a.dim();
  const auto D = inverse(gram_matrix(a, lambda));
  std::vector<Vec> dual(n, a.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) dual[i][l] = D.at(l, i);
  EchelonBuilder<F> image(a.field(), n);
  for (std::size_t k = 0; k < n; ++k) {
    Vec t = a.zero();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& bx = a.product(i, k);
      if (bx.empty()) continue;
      Vec left = a.zero();
      for (const auto& [m, c] : bx) left[m] += c;
      const Vec term = a.multiply(left, dual[i]);
      for (std::size_t r = 0; r < n; ++r) t[r] += term[r];
    }
    image.insert(std::move(t));
  }
  auto H = image.build();
  if (!socle_space.contains(H)) throw ConsistencyError("Higman ideal is not inside the socle");
  if (!centre_space.contains(H)) throw ConsistencyError("Higman ideal is not central");
  const auto expected = rank_in_characteristic(a.cartan_matrix(), a.field().characteristic());
  if (H.dim() != expected)
    throw ConsistencyError("Higman ideal has dimension " + std::to_string(H.dim()) +
                           " but the Cartan matrix has rank " + std::to_string(expected));
  return H;
}

template <ExactField F>
Subspace<F> reynolds_ideal(const Subspace<F>& centre_space, const Subspace<F>& socle_space) {
  return intersect(centre_space, socle_space);
}

template <ExactField F>
Subspace<F> reynolds_ideal(const Algebra<F>& a) {
  return reynolds_ideal(centre(a).subspace, a.socle());
}

/// Cokernel of the Cartan map: torsion divisors (those > 1) and free rank.
struct StableGrothendieck {
  std::vector<mpz_class> torsion;
  std::size_t free_rank = 0;

  bool operator==(const StableGrothendieck&) const = default;

  std::string to_string() const {
    std::string s;
    for (const auto& d : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
    for (std::size_t i = 0; i < free_rank; ++i) s += (s.empty() ? "" : " + ") + std::string("Z");
    return s.empty() ? "0" : s;
  }
};

inline StableGrothendieck stable_grothendieck(const MatrixZ& c) {
  const auto snf = smith_normal_form(c);
  StableGrothendieck g;
  for (const auto& d : snf.divisors)
    if (d > 1) g.torsion.push_back(d);
  g.free_rank = snf.cokernel_free_rank;
  return g;
}

}  // namespace tamesym
