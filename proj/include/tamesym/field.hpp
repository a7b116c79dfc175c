#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tamesym/errors.hpp"
#include "tamesym/field_spec.hpp"

namespace tamesym {

// ---------------------------------------------------------------------------
// Q

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  unsigned degree() const { return 1; }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long n) const { return Element(n); }
  Element from_rational(const mpq_class& q) const { return q; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw Error("division by zero");
    return Element(1) / a;
  }
  bool owns(const Element&) const { return true; }

  std::string format(const Element& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const { return true; }
};

// ---------------------------------------------------------------------------
// F_{p^m}

namespace detail {

struct GfTables {
  FieldSpec spec;
  std::uint32_t p = 0;
  unsigned m = 1;
  std::uint32_t q = 0;
  // m > 1 only: discrete logarithms with respect to a primitive element.
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> exp;
  std::vector<std::uint16_t> add;  // q*q, present when q <= 1024

  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < m; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  }
  std::uint32_t digit_neg(std::uint32_t a) const {
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < m; ++i) {
      out += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return out;
  }

  std::uint32_t plus(std::uint32_t a, std::uint32_t b) const {
    if (m == 1) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p);
    if (!add.empty()) return add[a * q + b];
    return digit_add(a, b);
  }
  std::uint32_t negate(std::uint32_t a) const {
    if (m == 1) return a == 0 ? 0 : p - a;
    return digit_neg(a);
  }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (m == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    return exp[(log[a] + log[b]) % (q - 1)];
  }
  std::uint32_t inverse(std::uint32_t a) const {
    if (a == 0) throw Error("division by zero");
    if (m == 1) return poly_mod_p::inv_mod(a, p);
    return exp[(q - 1 - log[a]) % (q - 1)];
  }

  // Polynomial product modulo the field modulus on encoded elements; only
  // used while building the tables.
  std::uint32_t slow_times(std::uint32_t a, std::uint32_t b) const {
    poly_mod_p::Poly fa(m, 0), fb(m, 0);
    for (unsigned i = 0; i < m; ++i) {
      fa[i] = a % p;
      a /= p;
      fb[i] = b % p;
      b /= p;
    }
    poly_mod_p::Poly prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j)
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + std::uint64_t{fa[i]} * fb[j]) % p);
    auto r = poly_mod_p::rem(prod, spec.modulus, p);
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < m; ++i) {
      out += (i < r.size() ? r[i] : 0) * scale;
      scale *= p;
    }
    return out;
  }

  explicit GfTables(const FieldSpec& s) : spec(s), p(s.characteristic), m(s.degree) {
    spec.validate();
    if (p == 0) throw InvalidField("GaloisField needs positive characteristic");
    const std::uint64_t order = spec.order();
    if (m > 1 && order > 65536)
      throw InvalidField("extension fields are limited to order 65536");
    if (order > 0xffffffffULL) throw InvalidField("field too large");
    q = static_cast<std::uint32_t>(order);
    if (m == 1) return;
    if (q <= 1024) {
      add.resize(std::size_t{q} * q);
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
          add[std::size_t{a} * q + b] =
              static_cast<std::uint16_t>(digit_add(a, b));
    }
    // Search for a primitive element.
    log.assign(q, 0);
    exp.assign(q - 1, 0);
    for (std::uint32_t cand = 2; cand < q; ++cand) {
      std::uint32_t x = 1, order_found = 0;
      do {
        x = slow_times(x, cand);
        ++order_found;
      } while (x != 1 && order_found < q);
      if (order_found != q - 1) continue;
      x = 1;
      for (std::uint32_t e = 0; e < q - 1; ++e) {
        exp[e] = x;
        log[x] = e;
        x = slow_times(x, cand);
      }
      return;
    }
    throw InvalidField("no primitive element found");
  }
};

}  // namespace detail

/// Element of a finite field; carries a pointer to its field's tables.
struct Gf {
  std::uint32_t v = 0;
  const detail::GfTables* t = nullptr;

  friend Gf operator+(Gf a, Gf b) { return {a.t->plus(a.v, b.v), a.t}; }
  friend Gf operator-(Gf a, Gf b) {
    return {a.t->plus(a.v, a.t->negate(b.v)), a.t};
  }
  friend Gf operator-(Gf a) { return {a.t->negate(a.v), a.t}; }
  friend Gf operator*(Gf a, Gf b) { return {a.t->times(a.v, b.v), a.t}; }
  friend Gf operator/(Gf a, Gf b) {
    return {a.t->times(a.v, a.t->inverse(b.v)), a.t};
  }
  Gf& operator+=(Gf b) { return *this = *this + b; }
  Gf& operator-=(Gf b) { return *this = *this - b; }
  Gf& operator*=(Gf b) { return *this = *this * b; }
  friend bool operator==(Gf a, Gf b) { return a.v == b.v; }
};

inline bool is_zero(const Gf& x) { return x.v == 0; }

class GaloisField {
 public:
  using Element = Gf;

  explicit GaloisField(const FieldSpec& spec)
      : tables_(std::make_shared<const detail::GfTables>(spec)) {}
  explicit GaloisField(std::uint32_t p) : GaloisField(FieldSpec::prime(p)) {}

  std::uint32_t characteristic() const { return tables_->p; }
  unsigned degree() const { return tables_->m; }
  std::uint32_t order() const { return tables_->q; }
  const FieldSpec& spec() const { return tables_->spec; }

  Element zero() const { return {0, tables_.get()}; }
  Element one() const { return {1, tables_.get()}; }
  Element from_int(long n) const {
    const long p = static_cast<long>(tables_->p);
    long r = n % p;
    if (r < 0) r += p;
    return {static_cast<std::uint32_t>(r), tables_.get()};
  }
  Element from_rational(const mpq_class& x) const {
    const mpz_class p = tables_->p;
    mpz_class num = x.get_num() % p, den = x.get_den() % p;
    if (den == 0)
      throw Error("denominator " + x.get_den().get_str() +
                  " vanishes in characteristic " + p.get_str());
    if (num < 0) num += p;
    if (den < 0) den += p;
    Element a{static_cast<std::uint32_t>(num.get_ui()), tables_.get()};
    Element b{static_cast<std::uint32_t>(den.get_ui()), tables_.get()};
    return a / b;
  }
  Element inv(const Element& a) const { return {tables_->inverse(a.v), tables_.get()}; }

  /// Class of x in F_p[x]/(modulus); generates the field over F_p.
  Element generator() const {
    if (tables_->m == 1)
      throw InvalidField("the generator g needs an extension field");
    return {tables_->p, tables_.get()};
  }

  /// Coordinates over F_p with respect to 1, g, ..., g^{m-1}.
  std::vector<std::uint32_t> digits(const Element& a) const {
    std::vector<std::uint32_t> out(tables_->m);
    std::uint32_t v = a.v;
    for (auto& d : out) {
      d = v % tables_->p;
      v /= tables_->p;
    }
    return out;
  }
  Element from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint32_t v = 0, scale = 1;
    for (unsigned i = 0; i < tables_->m; ++i) {
      v += (i < d.size() ? d[i] % tables_->p : 0) * scale;
      scale *= tables_->p;
    }
    return {v, tables_.get()};
  }

  bool owns(const Element& a) const {
    if (a.t == tables_.get()) return true;
    return a.t != nullptr && a.t->spec == tables_->spec;
  }

  std::string format(const Element& a) const {
    if (tables_->m == 1) return std::to_string(a.v);
    auto d = digits(a);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (d[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
      if (i > 0) {
        if (d[i] != 1) out += "*";
        out += i == 1 ? "g" : "g^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

  bool operator==(const GaloisField& other) const {
    return tables_ == other.tables_ || tables_->spec == other.tables_->spec;
  }

 private:
  std::shared_ptr<const detail::GfTables> tables_;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::Element& a) {
  { f.zero() } -> std::convertible_to<typename F::Element>;
  { f.one() } -> std::convertible_to<typename F::Element>;
  { f.from_int(1L) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  { f.degree() } -> std::convertible_to<unsigned>;
  { f.spec() } -> std::convertible_to<FieldSpec>;
  { f.owns(a) } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

template <class F>
inline constexpr bool is_finite_field_v = std::is_same_v<F, GaloisField>;

/// Calls fn with the concrete field described by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.characteristic == 0) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(GaloisField(spec));
}

}  // namespace tamesym
