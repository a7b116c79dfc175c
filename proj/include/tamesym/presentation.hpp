#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tamesym/errors.hpp"
#include "tamesym/field.hpp"
#include "tamesym/field_spec.hpp"

namespace tamesym {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  std::optional<int> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == name) return static_cast<int>(i);
    return std::nullopt;
  }

  bool connected() const {
    if (vertex_count <= 1) return true;
    std::vector<int> parent(static_cast<std::size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
      return v;
    };
    for (const auto& a : arrows) parent[static_cast<std::size_t>(find(a.source))] = find(a.target);
    const int root = find(0);
    for (int v = 1; v < vertex_count; ++v)
      if (find(v) != root) return false;
    return true;
  }
};

/// Paths are strings of arrow indices read left to right; "ab" is a then b.
using Word = std::string;

inline int word_start(const Quiver& q, const Word& w) {
  return q.arrows[static_cast<unsigned char>(w.front())].source;
}
inline int word_end(const Quiver& q, const Word& w) {
  return q.arrows[static_cast<unsigned char>(w.back())].target;
}

inline std::string word_name(const Quiver& q, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (char c : w) {
    if (!out.empty()) out += "*";
    out += q.arrows[static_cast<unsigned char>(c)].name;
  }
  return out;
}

/// Scalar held symbolically as a polynomial in the field generator g with
/// rational coefficients, so one presentation can be read over any field.
struct Coeff {
  std::map<unsigned, mpq_class> terms;  // exponent of g -> coefficient

  Coeff() = default;
  Coeff(const mpq_class& c) {  // NOLINT(google-explicit-constructor)
    if (sgn(c) != 0) terms[0] = c;
  }
  static Coeff generator() {
    Coeff c;
    c.terms[1] = 1;
    return c;
  }

  bool zero() const { return terms.empty(); }
  bool uses_generator() const { return !terms.empty() && terms.rbegin()->first > 0; }

  Coeff& operator+=(const Coeff& o) {
    for (const auto& [e, c] : o.terms) {
      auto& slot = terms[e];
      slot += c;
      if (sgn(slot) == 0) terms.erase(e);
    }
    return *this;
  }
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(const Coeff& a) {
    Coeff out = a;
    for (auto& [e, c] : out.terms) c = -c;
    return out;
  }
  friend Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    Coeff out;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) out += Coeff::monomial(ea + eb, ca * cb);
    return out;
  }
  bool operator==(const Coeff& o) const { return terms == o.terms; }

  static Coeff monomial(unsigned e, const mpq_class& c) {
    Coeff out;
    if (sgn(c) != 0) out.terms[e] = c;
    return out;
  }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = c.get_str();
      if (!out.empty()) out += sgn(c) < 0 ? "" : "+";
      if (e == 0) {
        out += cs;
      } else {
        if (c == 1) {
        } else if (c == -1) {
          out += "-";
        } else {
          out += cs + "*";
        }
        out += e == 1 ? "g" : "g^" + std::to_string(e);
      }
    }
    return out;
  }

  template <ExactField F>
  typename F::Element evaluate(const F& field) const {
    auto out = field.zero();
    if (terms.empty()) return out;
    if constexpr (std::is_same_v<F, GaloisField>) {
      auto g = uses_generator() ? field.generator() : field.one();
      auto power = field.one();
      unsigned e = 0;
      for (const auto& [exp, c] : terms) {
        while (e < exp) {
          power = power * g;
          ++e;
        }
        out += field.from_rational(c) * power;
      }
    } else {
      if (uses_generator())
        throw InvalidField("the generator g needs a finite extension field");
      out = field.from_rational(terms.begin()->second);
    }
    return out;
  }
};

struct RelationTerm {
  Coeff coeff;
  Word word;
};

struct Relation {
  std::vector<RelationTerm> terms;
  int start = 0;
  int end = 0;
  std::string text;
  int line = 0;
};

/// A parameter is an integer (usable as exponent and scalar) or a scalar.
struct ParamValue {
  std::optional<long> integer;
  Coeff scalar;
  std::string text;
};

struct Presentation {
  FieldSpec field;
  Quiver quiver;
  std::vector<Relation> relations;
  bool commutative = false;
  std::optional<unsigned> truncation_hint;
  std::map<std::string, ParamValue> params;

  /// Relations including commutators when the presentation is commutative.
  std::vector<Relation> effective_relations() const {
    auto out = relations;
    if (!commutative) return out;
    for (std::size_t i = 0; i < quiver.arrows.size(); ++i)
      for (std::size_t j = i + 1; j < quiver.arrows.size(); ++j) {
        const auto& a = quiver.arrows[i];
        const auto& b = quiver.arrows[j];
        if (a.source != a.target || b.source != b.target || a.source != b.source) continue;
        Relation r;
        const Word ab{static_cast<char>(i), static_cast<char>(j)};
        const Word ba{static_cast<char>(j), static_cast<char>(i)};
        r.terms = {{Coeff(1), ab}, {Coeff(-1), ba}};
        r.start = r.end = a.source;
        r.text = a.name + "*" + b.name + "-" + b.name + "*" + a.name;
        out.push_back(std::move(r));
      }
    return out;
  }
};

namespace detail {

/// Element of the free algebra during parsing: word -> coefficient; the empty
/// word stands for a scalar.
using FreePoly = std::map<Word, Coeff>;

class ExprParser {
 public:
  ExprParser(const std::string& text, int line, int col0, const Quiver& quiver,
             const std::map<std::string, ParamValue>& params)
      : s_(text), line_(line), col0_(col0), quiver_(quiver), params_(params) {}

  FreePoly parse_relation() {
    auto p = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

  Coeff parse_scalar() {
    auto p = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    Coeff out;
    for (const auto& [w, c] : p) {
      if (!w.empty()) throw ParseError("scalar expected, found a path", line_, col(0));
      out += c;
    }
    return out;
  }

  long parse_integer() {
    long v = int_expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  const std::string& s_;
  int line_;
  int col0_;
  const Quiver& quiver_;
  const std::map<std::string, ParamValue>& params_;
  std::size_t pos_ = 0;

  int col(std::size_t p) const { return col0_ + static_cast<int>(p); }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, col(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  static void add_into(FreePoly& acc, const FreePoly& p, bool negate) {
    for (const auto& [w, c] : p) {
      auto& slot = acc[w];
      slot += negate ? -c : c;
      if (slot.zero()) acc.erase(w);
    }
  }

  FreePoly multiply(const FreePoly& a, const FreePoly& b, std::size_t at) const {
    FreePoly out;
    for (const auto& [wa, ca] : a)
      for (const auto& [wb, cb] : b) {
        if (!wa.empty() && !wb.empty() && word_end(quiver_, wa) != word_start(quiver_, wb))
          throw PathError("path " + word_name(quiver_, wa) + " does not compose with " +
                              word_name(quiver_, wb),
                          line_, col(at));
        const Coeff c = ca * cb;
        if (c.zero()) continue;
        auto& slot = out[wa + wb];
        slot += c;
        if (slot.zero()) out.erase(wa + wb);
      }
    return out;
  }

  FreePoly expr() {
    FreePoly acc;
    bool negate = false;
    skip_ws();
    if (peek('-')) {
      ++pos_;
      negate = true;
    } else if (peek('+')) {
      ++pos_;
    }
    add_into(acc, term(), negate);
    while (true) {
      if (peek('+')) {
        ++pos_;
        add_into(acc, term(), false);
      } else if (peek('-')) {
        ++pos_;
        add_into(acc, term(), true);
      } else {
        break;
      }
    }
    return acc;
  }

  FreePoly term() {
    FreePoly acc = factor();
    while (true) {
      const std::size_t at = pos_;
      if (peek('*')) {
        ++pos_;
        acc = multiply(acc, factor(), at);
      } else if (starts_factor()) {
        acc = multiply(acc, factor(), at);
      } else {
        break;
      }
    }
    return acc;
  }

  FreePoly factor() {
    const std::size_t at = pos_;
    FreePoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size()) fail("exponent expected after '^'");
      const long e = exponent();
      if (e < 0) throw ParseError("negative exponent", line_, col(at));
      FreePoly out{{Word{}, Coeff(1)}};
      for (long i = 0; i < e; ++i) out = multiply(out, base, at);
      return out;
    }
    return base;
  }

  FreePoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("operand expected");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!peek(')')) fail("')' expected");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = number();
      mpq_class q(num);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          fail("denominator expected");
        mpz_class den = number();
        if (den == 0) fail("zero denominator");
        q = mpq_class(num, den);
        q.canonicalize();
      }
      return {{Word{}, Coeff(q)}};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = pos_;
      const std::string name = ident();
      if (auto idx = quiver_.index_of(name)) return {{Word(1, static_cast<char>(*idx)), Coeff(1)}};
      if (auto it = params_.find(name); it != params_.end()) {
        if (it->second.scalar.zero()) return {};
        return {{Word{}, it->second.scalar}};
      }
      if (name == "g") return {{Word{}, Coeff::generator()}};
      throw NameError("unknown name '" + name + "'", line_, col(at));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  long exponent() {
    skip_ws();
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      long v = int_expr();
      if (!peek(')')) fail("')' expected");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number().get_si();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return int_name();
    fail("exponent expected after '^'");
  }

  long int_name() {
    const std::size_t at = pos_;
    const std::string name = ident();
    auto it = params_.find(name);
    if (it == params_.end()) throw NameError("unknown parameter '" + name + "'", line_, col(at));
    if (!it->second.integer)
      throw ParseError("parameter '" + name + "' is not an integer", line_, col(at));
    return *it->second.integer;
  }

  long int_expr() {
    long acc = 0;
    int sign = 1;
    if (peek('-')) {
      ++pos_;
      sign = -1;
    }
    acc = sign * int_term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += int_term();
      } else if (peek('-')) {
        ++pos_;
        acc -= int_term();
      } else {
        return acc;
      }
    }
  }
  long int_term() {
    long acc = int_atom();
    while (peek('*')) {
      ++pos_;
      acc *= int_atom();
    }
    return acc;
  }
  long int_atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("integer expected");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      long v = int_expr();
      if (!peek(')')) fail("')' expected");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number().get_si();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return int_name();
    fail("integer expected");
  }

  mpz_class number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return mpz_class(s_.substr(start, pos_ - start));
  }
  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }
};

inline bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

/// Polynomial in x with integer coefficients, reduced mod p; low to high.
inline std::vector<std::uint32_t> parse_modulus(const std::string& text, std::uint32_t p,
                                                int line, int col0) {
  std::map<unsigned, long> coeffs;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError(what, line, col0 + static_cast<int>(pos));
  };
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("'+' or '-' expected in modulus");
    }
    first = false;
    long c = 1;
    bool have_c = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t s = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      c = std::stol(text.substr(s, pos - s));
      have_c = true;
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    unsigned e = 0;
    if (pos < text.size() && text[pos] == 'x') {
      ++pos;
      e = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t s = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (s == pos) fail("exponent expected in modulus");
        e = static_cast<unsigned>(std::stoul(text.substr(s, pos - s)));
      }
    } else if (!have_c) {
      fail("term expected in modulus");
    }
    coeffs[e] += sign * c;
  }
  if (coeffs.empty()) fail("empty modulus");
  std::vector<std::uint32_t> out(coeffs.rbegin()->first + 1, 0);
  for (const auto& [e, c] : coeffs) {
    long r = c % static_cast<long>(p);
    if (r < 0) r += p;
    out[e] = static_cast<std::uint32_t>(r);
  }
  return out;
}

}  // namespace detail

/// Parses the line-oriented presentation language (see docs/presentation-grammar.md).
inline Presentation parse_presentation(const std::string& text) {
  Presentation pres;
  bool have_field = false, have_vertices = false;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::size_t p = 0;
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (p == line.size()) continue;
    std::size_t kw_end = p;
    while (kw_end < line.size() && !std::isspace(static_cast<unsigned char>(line[kw_end]))) ++kw_end;
    const std::string kw = line.substr(p, kw_end - p);
    std::size_t rest_start = kw_end;
    while (rest_start < line.size() && std::isspace(static_cast<unsigned char>(line[rest_start])))
      ++rest_start;
    std::string rest = line.substr(rest_start);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.pop_back();
    const int rest_col = static_cast<int>(rest_start) + 1;

    auto words = [&]() {
      std::vector<std::pair<std::string, int>> out;
      std::size_t i = 0;
      while (i < rest.size()) {
        while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
        if (i == rest.size()) break;
        std::size_t s = i;
        while (i < rest.size() && !std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
        out.emplace_back(rest.substr(s, i - s), rest_col + static_cast<int>(s));
      }
      return out;
    };
    auto to_int = [&](const std::string& s, int col) -> long {
      if (s.empty()) throw ParseError("integer expected", line_no, col);
      std::size_t i = s[0] == '-' ? 1 : 0;
      if (i == s.size()) throw ParseError("integer expected", line_no, col);
      for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
          throw ParseError("integer expected, found '" + s + "'", line_no, col);
      return std::stol(s);
    };

    if (kw == "field") {
      std::uint32_t characteristic = 0;
      std::uint64_t order = 0;
      std::optional<std::string> modulus;
      int modulus_col = 0;
      bool have_char = false;
      for (const auto& [w, col] : words()) {
        auto eq = w.find('=');
        if (eq == std::string::npos) throw ParseError("key=value expected", line_no, col);
        const std::string key = w.substr(0, eq), val = w.substr(eq + 1);
        const int vcol = col + static_cast<int>(eq) + 1;
        if (key == "char") {
          long c = to_int(val, vcol);
          if (c < 0) throw ParseError("characteristic must be non-negative", line_no, vcol);
          characteristic = static_cast<std::uint32_t>(c);
          have_char = true;
        } else if (key == "order") {
          long o = to_int(val, vcol);
          if (o < 2) throw ParseError("field order must be at least 2", line_no, vcol);
          order = static_cast<std::uint64_t>(o);
        } else if (key == "modulus") {
          modulus = val;
          modulus_col = vcol;
        } else {
          throw ParseError("unknown field key '" + key + "'", line_no, col);
        }
      }
      if (!have_char) throw ParseError("field needs char=", line_no, rest_col);
      if (characteristic != 0 && !is_prime(characteristic))
        throw InvalidPrime(std::to_string(characteristic) + " is not prime");
      std::optional<std::vector<std::uint32_t>> mod;
      if (modulus) {
        if (characteristic == 0) throw ParseError("Q takes no modulus", line_no, modulus_col);
        mod = detail::parse_modulus(*modulus, characteristic, line_no, modulus_col);
        if (order == 0) {
          order = 1;
          for (std::size_t i = 1; i < mod->size(); ++i) order *= characteristic;
        }
      }
      pres.field = FieldSpec::of_order(characteristic, order, mod);
      have_field = true;
    } else if (kw == "vertices") {
      auto ws = words();
      if (ws.size() != 1) throw ParseError("vertices takes one integer", line_no, rest_col);
      long n = to_int(ws[0].first, ws[0].second);
      if (n < 1) throw ParseError("at least one vertex required", line_no, ws[0].second);
      pres.quiver.vertex_count = static_cast<int>(n);
      have_vertices = true;
    } else if (kw == "arrow") {
      auto ws = words();
      if (ws.size() != 3) throw ParseError("arrow <name> <source> <target>", line_no, rest_col);
      if (!have_vertices) throw ParseError("vertices must precede arrows", line_no, 1);
      const auto& name = ws[0].first;
      if (!detail::valid_identifier(name) || name == "g")
        throw ParseError("invalid arrow name '" + name + "'", line_no, ws[0].second);
      if (pres.quiver.index_of(name) || pres.params.count(name))
        throw ParseError("duplicate name '" + name + "'", line_no, ws[0].second);
      if (pres.quiver.arrows.size() >= 200)
        throw ParseError("too many arrows", line_no, ws[0].second);
      long s = to_int(ws[1].first, ws[1].second), t = to_int(ws[2].first, ws[2].second);
      if (s < 0 || s >= pres.quiver.vertex_count)
        throw ParseError("source vertex out of range", line_no, ws[1].second);
      if (t < 0 || t >= pres.quiver.vertex_count)
        throw ParseError("target vertex out of range", line_no, ws[2].second);
      pres.quiver.arrows.push_back({name, static_cast<int>(s), static_cast<int>(t)});
    } else if (kw == "param") {
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError("param <name>=<value>", line_no, rest_col);
      std::string name = rest.substr(0, eq);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      if (!detail::valid_identifier(name) || name == "g")
        throw ParseError("invalid parameter name '" + name + "'", line_no, rest_col);
      if (pres.quiver.index_of(name) || pres.params.count(name))
        throw ParseError("duplicate name '" + name + "'", line_no, rest_col);
      const std::string value = rest.substr(eq + 1);
      const int vcol = rest_col + static_cast<int>(eq) + 1;
      ParamValue pv;
      pv.text = value;
      while (!pv.text.empty() && std::isspace(static_cast<unsigned char>(pv.text.front())))
        pv.text.erase(pv.text.begin());
      detail::ExprParser ep(value, line_no, vcol, pres.quiver, pres.params);
      pv.scalar = ep.parse_scalar();
      if (!pv.scalar.uses_generator()) {
        const mpq_class q = pv.scalar.zero() ? mpq_class(0) : pv.scalar.terms.begin()->second;
        if (q.get_den() == 1 && q.get_num().fits_slong_p()) pv.integer = q.get_num().get_si();
      }
      pres.params.emplace(name, std::move(pv));
    } else if (kw == "relation") {
      if (rest.empty()) throw ParseError("relation expression expected", line_no, rest_col);
      detail::ExprParser ep(rest, line_no, rest_col, pres.quiver, pres.params);
      auto poly = ep.parse_relation();
      if (poly.empty()) throw ParseError("relation is identically zero", line_no, rest_col);
      Relation rel;
      rel.text = rest;
      rel.line = line_no;
      bool first = true;
      for (const auto& [w, c] : poly) {
        if (w.empty())
          throw PathError("relation has a term of length zero", line_no, rest_col);
        const int s = word_start(pres.quiver, w), t = word_end(pres.quiver, w);
        if (first) {
          rel.start = s;
          rel.end = t;
          first = false;
        } else if (s != rel.start || t != rel.end) {
          throw PathError("terms of a relation must be parallel paths", line_no, rest_col);
        }
        rel.terms.push_back({c, w});
      }
      pres.relations.push_back(std::move(rel));
    } else if (kw == "commutative") {
      if (!rest.empty()) throw ParseError("commutative takes no arguments", line_no, rest_col);
      pres.commutative = true;
    } else if (kw == "truncate") {
      auto ws = words();
      if (ws.size() != 1) throw ParseError("truncate takes one integer", line_no, rest_col);
      long n = to_int(ws[0].first, ws[0].second);
      if (n < 2) throw ParseError("truncation must be at least 2", line_no, ws[0].second);
      pres.truncation_hint = static_cast<unsigned>(n);
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line_no, static_cast<int>(p) + 1);
    }
  }
  if (!have_field) pres.field = FieldSpec::rationals();
  if (!have_vertices) throw ParseError("missing 'vertices' line", line_no, 1);
  return pres;
}

}  // namespace tamesym
