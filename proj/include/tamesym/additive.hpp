#pragma once

#include <cstddef>
#include <vector>

#include "tamesym/subspace.hpp"

namespace tamesym {

/// Kernel of an additive map given by the images of a prime-field basis of
/// its domain (row i = image of basis vector i, written over the prime field).
inline Subspace<GaloisField> kernel_additive_map(const Matrix<GaloisField>& images) {
  if (images.field().degree() != 1)
    throw InvalidField("additive maps are written over the prime field");
  return left_kernel(images);
}

/// Restriction of scalars F_{p^m}^n -> F_p^{mn}; coordinate (k, i) sits at
/// index k*m + i and holds the g^i digit of entry k.
inline std::vector<Gf> restrict_scalars(const GaloisField& big, const GaloisField& prime,
                                        const std::vector<Gf>& v) {
  const unsigned m = big.degree();
  std::vector<Gf> out(v.size() * m, prime.zero());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto d = big.digits(v[k]);
    for (unsigned i = 0; i < m; ++i) out[k * m + i] = prime.from_int(static_cast<long>(d[i]));
  }
  return out;
}

inline std::vector<Gf> extend_scalars(const GaloisField& big, const std::vector<Gf>& w) {
  const unsigned m = big.degree();
  std::vector<Gf> out(w.size() / m, big.zero());
  std::vector<std::uint32_t> d(m);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (unsigned i = 0; i < m; ++i) d[i] = w[k * m + i].v;
    out[k] = big.from_digits(d);
  }
  return out;
}

/// The prime-field basis g^i * e_k of F_{p^m}^n, in restriction order.
inline std::vector<std::vector<Gf>> prime_field_basis(const GaloisField& big, std::size_t n) {
  const unsigned m = big.degree();
  std::vector<Gf> powers{big.one()};
  for (unsigned i = 1; i < m; ++i) powers.push_back(powers.back() * big.generator());
  std::vector<std::vector<Gf>> out;
  for (std::size_t k = 0; k < n; ++k)
    for (unsigned i = 0; i < m; ++i) {
      std::vector<Gf> v(n, big.zero());
      v[k] = powers[i];
      out.push_back(std::move(v));
    }
  return out;
}

}  // namespace tamesym
