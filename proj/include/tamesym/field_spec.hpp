#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamesym/errors.hpp"

namespace tamesym {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace poly_mod_p {

// Dense polynomials over F_p, coefficients low to high, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

/// Remainder of f modulo a nonzero g.
inline Poly rem(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor =
        static_cast<std::uint64_t>(f.back()) * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

/// Irreducibility by trial division against every monic polynomial of
/// degree 1..deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  Poly g = f;
  trim(g);
  const std::size_t deg = g.empty() ? 0 : g.size() - 1;
  if (deg == 0) return false;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      if (rem(g, divisor, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace poly_mod_p

/// Runtime description of a base field: Q, or F_{p^m} = F_p[x]/(modulus).
struct FieldSpec {
  std::uint32_t characteristic = 0;
  unsigned degree = 1;
  /// Monic modulus, coefficients low to high (size degree + 1); empty when
  /// degree == 1.
  std::vector<std::uint32_t> modulus;

  static FieldSpec rationals() { return {}; }

  static FieldSpec prime(std::uint32_t p) {
    FieldSpec spec{p, 1, {}};
    spec.validate();
    return spec;
  }

  /// F_{p^m}; when no modulus is given the built-in table is consulted.
  static FieldSpec extension(std::uint32_t p, unsigned m,
                             std::optional<std::vector<std::uint32_t>> modulus =
                                 std::nullopt) {
    if (m == 1 && !modulus) return prime(p);
    FieldSpec spec{p, m, {}};
    if (modulus) {
      spec.modulus = *modulus;
    } else {
      auto builtin = default_modulus(p, m);
      if (!builtin)
        throw InvalidField("no built-in modulus for F_" + std::to_string(p) +
                           "^" + std::to_string(m) + "; supply one");
      spec.modulus = *builtin;
    }
    spec.validate();
    return spec;
  }

  /// Field of the given order (a prime power, or 0 for Q).
  static FieldSpec of_order(std::uint32_t characteristic, std::uint64_t order,
                            std::optional<std::vector<std::uint32_t>> modulus =
                                std::nullopt) {
    if (characteristic == 0) {
      if (order != 0 && order != 1)
        throw InvalidField("characteristic 0 has no finite order");
      return rationals();
    }
    if (!is_prime(characteristic))
      throw InvalidPrime(std::to_string(characteristic) + " is not prime");
    if (order == 0) order = characteristic;
    unsigned m = 0;
    std::uint64_t q = 1;
    while (q < order) {
      q *= characteristic;
      ++m;
    }
    if (q != order)
      throw InvalidField(std::to_string(order) + " is not a power of " +
                         std::to_string(characteristic));
    return extension(characteristic, m, std::move(modulus));
  }

  static std::optional<std::vector<std::uint32_t>> default_modulus(
      std::uint32_t p, unsigned m) {
    struct Row {
      std::uint32_t p;
      unsigned m;
      std::vector<std::uint32_t> coeffs;
    };
    static const std::vector<Row> table = {
        {2, 2, {1, 1, 1}},       {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}}, {3, 2, {2, 1, 1}},
        {3, 3, {1, 2, 0, 1}},    {3, 4, {2, 1, 0, 0, 1}},
        {5, 2, {2, 1, 1}},       {5, 3, {2, 3, 0, 1}},
        {5, 4, {2, 2, 1, 0, 1}},
    };
    for (const auto& row : table)
      if (row.p == p && row.m == m) return row.coeffs;
    return std::nullopt;
  }

  void validate() const {
    if (characteristic == 0) {
      if (degree != 1 || !modulus.empty())
        throw InvalidField("Q has no extension data");
      return;
    }
    if (!is_prime(characteristic))
      throw InvalidPrime(std::to_string(characteristic) + " is not prime");
    if (degree == 0) throw InvalidField("extension degree must be positive");
    if (degree == 1) {
      if (!modulus.empty())
        throw InvalidField("prime field takes no modulus");
      return;
    }
    if (modulus.size() != degree + 1 || modulus.back() != 1)
      throw InvalidField("modulus must be monic of degree " +
                         std::to_string(degree));
    for (auto c : modulus)
      if (c >= characteristic)
        throw InvalidField("modulus coefficients must be reduced mod p");
    if (!poly_mod_p::is_irreducible(modulus, characteristic))
      throw InvalidField("modulus " + modulus_string() +
                         " is reducible over F_" +
                         std::to_string(characteristic));
  }

  std::uint64_t order() const {
    if (characteristic == 0) return 0;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < degree; ++i) q *= characteristic;
    return q;
  }

  std::string modulus_string() const {
    std::string out;
    for (std::size_t i = modulus.size(); i-- > 0;) {
      if (modulus[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0 || modulus[i] != 1) out += std::to_string(modulus[i]);
      if (i > 0) {
        if (modulus[i] != 1) out += "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  std::string to_string() const {
    if (characteristic == 0) return "Q";
    std::string out = "F_" + std::to_string(order());
    if (degree > 1) out += "[" + modulus_string() + "]";
    return out;
  }

  bool operator==(const FieldSpec&) const = default;
};

}  // namespace tamesym
