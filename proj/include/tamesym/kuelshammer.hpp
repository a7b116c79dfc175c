#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tamesym/invariants.hpp"

namespace tamesym {

inline constexpr unsigned kMaxKuelshammerLevel = 6;

/// {y : lambda(y s) = 0 for every s in the subspace}.
template <ExactField F>
Subspace<F> perp(const Subspace<F>& s, const LinearForm<F>& lambda, const Algebra<F>& a) {
  Matrix<F> m(a.field(), 0, a.dim());
  for (const auto& v : s.vectors()) {
    auto row = a.zero();
    for (std::size_t y = 0; y < a.dim(); ++y)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (is_zero(v[k])) continue;
        for (const auto& [j, c] : a.product(y, k))
          if (!is_zero(lambda.coeffs[j])) row[y] += v[k] * c * lambda.coeffs[j];
      }
    m.append_row(row);
  }
  return kernel(m);
}

/// T_n = {x : x^(p^n) in [A, A]}. The p^n-power map is additive modulo the
/// commutator space, so T_n is the kernel of a prime-field-linear map; its
/// K-span is then checked to add nothing.
template <ExactField F>
Subspace<F> t_space(const Algebra<F>& a, unsigned n, const Subspace<F>& commutators) {
  if constexpr (!is_finite_field_v<F>) {
    throw CharZero("Kuelshammer spaces need positive characteristic");
  } else {
    if (n > kMaxKuelshammerLevel)
      throw ParameterConstraint("level " + std::to_string(n) + " above the cap " +
                                std::to_string(kMaxKuelshammerLevel));
    const GaloisField& big = a.field();
    const GaloisField prime(big.characteristic());
    const unsigned m = big.degree();
    std::uint64_t e = 1;
    for (unsigned i = 0; i < n; ++i) e *= big.characteristic();
    const auto gens = prime_field_basis(big, a.dim());
    Matrix<GaloisField> images(prime, 0, a.dim() * m);
    for (const auto& x : gens)
      images.append_row(restrict_scalars(big, prime, commutators.reduce(a.power(x, e))));
    const auto ker = kernel_additive_map(images);
    std::vector<std::vector<Gf>> vs;
    for (const auto& w : ker.vectors()) vs.push_back(extend_scalars(big, w));
    auto T = Subspace<GaloisField>::span(big, a.dim(), vs);
    if (T.dim() * m != ker.dim())
      throw KStabilityFailure("T_" + std::to_string(n) + " has prime-field dimension " +
                              std::to_string(ker.dim()) + ", not " + std::to_string(m) +
                              " times its K-dimension " + std::to_string(T.dim()));
    return T;
  }
}

template <ExactField F>
struct TnData {
  unsigned n = 0;
  Subspace<F> t_space;
  Subspace<F> t_perp;
  Fingerprint quotient_fp;
};

/// T_n, its orthogonal space, and the fingerprint of Z(A) / T_n^perp.
template <ExactField F>
TnData<F> kuelshammer_quotient(const Algebra<F>& a, unsigned n, const Centre<F>& z,
                               const Subspace<F>& commutators, const LinearForm<F>& lambda) {
  auto T = t_space(a, n, commutators);
  auto P = perp(T, lambda, a);
  if (!z.subspace.contains(P)) throw ConsistencyError("T_n^perp is not central");
  auto q = quotient_comm(z.algebra, in_coordinates(z.subspace, P));
  return {n, std::move(T), std::move(P), fingerprint(q)};
}

template <ExactField F>
TnData<F> kuelshammer_quotient(const Algebra<F>& a, unsigned n) {
  const auto C = commutator_space(a);
  return kuelshammer_quotient(a, n, centre(a), C, symmetrizing_form(a, C));
}

}  // namespace tamesym
