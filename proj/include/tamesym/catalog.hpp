#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tamesym/errors.hpp"
#include "tamesym/field.hpp"
#include "tamesym/integer_matrix.hpp"
#include "tamesym/presentation.hpp"

namespace tamesym {

enum class RepType { dihedral, semidihedral, quaternion };

inline std::string to_string(RepType r) {
  switch (r) {
    case RepType::dihedral: return "dihedral";
    case RepType::semidihedral: return "semidihedral";
    case RepType::quaternion: return "quaternion";
  }
  return "?";
}

inline RepType rep_type_from_string(const std::string& s) {
  if (s == "dihedral") return RepType::dihedral;
  if (s == "semidihedral") return RepType::semidihedral;
  if (s == "quaternion") return RepType::quaternion;
  throw ParameterConstraint("unknown representation type '" + s + "'");
}

struct FamilyInfo {
  std::string code;
  RepType rep;
  int simples;
  std::vector<std::string> int_params;
  std::vector<std::string> scalar_params;
  bool char2_only;
  std::string constraints;  // human-readable, as checked by make_entry
};

/// Stable order: dihedral, semidihedral, quaternion; by simple count within each.
inline const std::vector<FamilyInfo>& list_families() {
  static const std::vector<FamilyInfo> families = {
      {"A1", RepType::dihedral, 1, {"m", "n"}, {}, false, "m >= n >= 2, m + n > 4"},
      {"C1", RepType::dihedral, 1, {}, {}, false, ""},
      {"B1", RepType::dihedral, 1, {}, {}, true, "char 2"},
      {"D1A1", RepType::dihedral, 1, {"k"}, {}, false, "k >= 2"},
      {"D1A2", RepType::dihedral, 1, {"k"}, {"d"}, true, "k >= 2, d in {0, 1}, char 2"},
      {"D2B", RepType::dihedral, 2, {"k", "s"}, {"c"}, false, "k >= s >= 1, c in {0, 1}, c = 1 only in char 2"},
      {"D3K", RepType::dihedral, 3, {"a", "b", "c"}, {}, false, "a >= b >= c >= 1"},
      {"D3R", RepType::dihedral, 3, {"k", "s", "t", "u"}, {}, false, "s >= t >= u >= k >= 1, t >= 2"},
      {"SD1A1", RepType::semidihedral, 1, {"k"}, {}, false, "k >= 2"},
      {"SD1A2", RepType::semidihedral, 1, {"k"}, {"c", "d"}, true, "k >= 2, (c, d) != (0, 0), char 2"},
      {"SD2B1", RepType::semidihedral, 2, {"k", "t"}, {"c"}, false, "k >= 1, t >= 2, c in {0, 1}"},
      {"SD2B2", RepType::semidihedral, 2, {"k", "t"}, {"c"}, false, "k >= 1, t >= 2, k + t >= 4, c in {0, 1}"},
      {"SD3K", RepType::semidihedral, 3, {"a", "b", "c"}, {}, false, "a >= b >= c >= 1, a >= 2"},
      {"Q1A1", RepType::quaternion, 1, {"k"}, {}, false, "k >= 2"},
      {"Q1A2", RepType::quaternion, 1, {"k"}, {"c", "d"}, true, "k >= 2, (c, d) != (0, 0), char 2"},
      {"Q2B1", RepType::quaternion, 2, {"k", "s"}, {"a", "c"}, false, "k >= 1, s >= 3, a != 0"},
      {"Q3K", RepType::quaternion, 3, {"a", "b", "c"}, {}, false, "a >= b >= c >= 1, b >= 2, (a, b, c) != (2, 2, 1)"},
      {"Q3A1", RepType::quaternion, 3, {}, {"d"}, false, "d not in {0, 1}"},
  };
  return families;
}

inline const FamilyInfo& family_info(const std::string& code) {
  for (const auto& f : list_families())
    if (f.code == code) return f;
  throw ParameterConstraint("unknown family '" + code + "'");
}

/// Parameter values by name; scalars keep their literal text ("0", "g+1", "1/2").
using Params = std::map<std::string, std::string>;

/// Parses "k=2,s=3,c=1".
inline Params parse_params(const std::string& text) {
  Params out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto trim = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      return s;
    };
    item = trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParameterConstraint("parameter '" + item + "' needs name=value");
    const std::string key = trim(item.substr(0, eq)), val = trim(item.substr(eq + 1));
    if (key.empty() || val.empty()) throw ParameterConstraint("parameter '" + item + "' needs name=value");
    if (out.count(key)) throw ParameterConstraint("parameter '" + key + "' given twice");
    out[key] = val;
  }
  return out;
}

struct Expected {
  std::optional<std::size_t> dim;
  std::optional<std::size_t> dim_Z;
  std::optional<std::size_t> dim_R;
  std::optional<MatrixZ> cartan;
  std::optional<long> det;
};

struct CatalogEntry {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;  // family order
  FieldSpec field;
  Presentation presentation;
  RepType rep_type = RepType::dihedral;
  int n_simples = 1;
  bool special_biserial = false;
  std::string char_constraint;
  unsigned truncation_hint = 8;
  Expected expected;
  /// Family constraints knowingly skipped (block representatives outside the
  /// family's stated parameter range); empty for ordinary entries.
  std::vector<std::string> waived;
  std::string note;
  /// False for entries read from a DSL file: type and biserial flag unknown.
  bool catalogued = true;

  long ip(const std::string& name) const {
    for (const auto& [k, v] : params)
      if (k == name) return std::stol(v);
    throw ParameterConstraint("no parameter '" + name + "'");
  }

  std::string label() const {
    std::string s = family;
    if (params.empty()) return s;
    s += "(";
    for (std::size_t i = 0; i < params.size(); ++i)
      s += (i ? "," : "") + params[i].first + "=" + params[i].second;
    return s + ")";
  }
};

struct MakeOptions {
  bool enforce_constraints = true;
};

namespace detail {

inline const char* quiver_1A = "vertices 1\narrow X 0 0\narrow Y 0 0\n";
inline const char* quiver_2B =
    "vertices 2\narrow alpha 0 0\narrow beta 0 1\narrow gamma 1 0\narrow eta 1 1\n";
inline const char* quiver_3K =
    "vertices 3\narrow beta 0 1\narrow gamma 1 0\narrow kappa 0 2\narrow lambda 2 0\n"
    "arrow delta 1 2\narrow eta 2 1\n";
inline const char* quiver_3R =
    "vertices 3\narrow alpha 0 0\narrow beta 0 1\narrow rho 1 1\narrow delta 1 2\n"
    "arrow xi 2 2\narrow lambda 2 0\n";
inline const char* quiver_3A = "vertices 3\narrow beta 0 1\narrow gamma 1 0\narrow delta 1 2\narrow eta 2 1\n";

inline std::vector<std::string> relations_for(const std::string& f) {
  if (f == "A1") return {"X*Y", "X^m-Y^n"};
  if (f == "C1") return {"X^2", "Y^2"};
  if (f == "B1") return {"X^2", "Y^2-X*Y"};
  if (f == "D1A1") return {"X^2", "Y^2", "(X*Y)^k-(Y*X)^k"};
  if (f == "D1A2")
    return {"X^2-(X*Y)^k", "Y^2-d*(X*Y)^k", "(X*Y)^k-(Y*X)^k", "(X*Y)^k*X", "(Y*X)^k*Y"};
  if (f == "SD1A1") return {"(X*Y)^k-(Y*X)^k", "(X*Y)^k*X", "Y^2", "X^2-(Y*X)^(k-1)*Y"};
  if (f == "SD1A2")
    return {"(X*Y)^k-(Y*X)^k", "(X*Y)^k*X", "Y^2-d*(X*Y)^k", "X^2-(Y*X)^(k-1)*Y+c*(X*Y)^k"};
  if (f == "Q1A1")
    return {"(X*Y)^k-(Y*X)^k", "(X*Y)^k*X", "Y^2-(X*Y)^(k-1)*X", "X^2-(Y*X)^(k-1)*Y"};
  if (f == "Q1A2")
    return {"X^2-(Y*X)^(k-1)*Y-c*(X*Y)^k", "Y^2-(X*Y)^(k-1)*X-d*(X*Y)^k", "(X*Y)^k-(Y*X)^k",
            "(X*Y)^k*X", "(Y*X)^k*Y"};
  if (f == "D2B")
    return {"beta*eta", "eta*gamma", "gamma*beta", "alpha^2-c*(alpha*beta*gamma)^k",
            "(alpha*beta*gamma)^k-(beta*gamma*alpha)^k", "eta^s-(gamma*alpha*beta)^k"};
  if (f == "SD2B1")
    return {"gamma*beta", "eta*gamma", "beta*eta",
            "alpha^2-(beta*gamma*alpha)^(k-1)*beta*gamma-c*(alpha*beta*gamma)^k",
            "eta^t-(gamma*alpha*beta)^k", "(alpha*beta*gamma)^k-(beta*gamma*alpha)^k"};
  if (f == "SD2B2")
    return {"beta*eta-(alpha*beta*gamma)^(k-1)*alpha*beta",
            "eta*gamma-(gamma*alpha*beta)^(k-1)*gamma*alpha", "gamma*beta-eta^(t-1)",
            "alpha^2-c*(alpha*beta*gamma)^k", "beta*eta^2", "eta^2*gamma"};
  if (f == "Q2B1")
    return {"gamma*beta-eta^(s-1)", "beta*eta-(alpha*beta*gamma)^(k-1)*alpha*beta",
            "eta*gamma-(gamma*alpha*beta)^(k-1)*gamma*alpha",
            "alpha^2-a*(beta*gamma*alpha)^(k-1)*beta*gamma-c*(beta*gamma*alpha)^k",
            "alpha^2*beta", "gamma*alpha^2"};
  if (f == "D3K")
    return {"beta*delta", "delta*lambda", "lambda*beta", "gamma*kappa", "kappa*eta", "eta*gamma",
            "(beta*gamma)^a-(kappa*lambda)^b", "(lambda*kappa)^b-(eta*delta)^c",
            "(delta*eta)^c-(gamma*beta)^a"};
  // The rho-cycle is delta*lambda*beta; the printed relation names an arrow
  // gamma that the 3R quiver does not have.
  if (f == "D3R")
    return {"alpha*beta", "beta*rho", "rho*delta", "delta*xi", "xi*lambda", "lambda*alpha",
            "alpha^s-(beta*delta*lambda)^k", "rho^t-(delta*lambda*beta)^k",
            "xi^u-(lambda*beta*delta)^k"};
  // First deformed relation read as delta*lambda - (gamma*beta)^(a-1)*gamma,
  // the only composable reading on the 3K quiver.
  if (f == "SD3K")
    return {"kappa*eta", "eta*gamma", "gamma*kappa", "delta*lambda-(gamma*beta)^(a-1)*gamma",
            "beta*delta-(kappa*lambda)^(b-1)*kappa", "lambda*beta-(eta*delta)^(c-1)*eta"};
  if (f == "Q3K")
    return {"beta*delta-(kappa*lambda)^(a-1)*kappa", "eta*gamma-(lambda*kappa)^(a-1)*lambda",
            "delta*lambda-(gamma*beta)^(b-1)*gamma", "kappa*eta-(beta*gamma)^(b-1)*beta",
            "lambda*beta-(eta*delta)^(c-1)*eta", "gamma*kappa-(delta*eta)^(c-1)*delta",
            "gamma*beta*delta", "delta*eta*gamma", "lambda*kappa*eta"};
  if (f == "Q3A1")
    return {"beta*delta*eta-beta*gamma*beta", "delta*eta*gamma-gamma*beta*gamma",
            "eta*gamma*beta-d*eta*delta*eta", "gamma*beta*delta-d*delta*eta*delta",
            "beta*delta*eta*delta", "eta*gamma*beta*gamma"};
  throw ParameterConstraint("unknown family '" + f + "'");
}

inline const char* quiver_for(const FamilyInfo& f) {
  if (f.simples == 1) return quiver_1A;
  if (f.simples == 2) return quiver_2B;
  if (f.code == "D3R") return quiver_3R;
  if (f.code == "Q3A1") return quiver_3A;
  return quiver_3K;
}

inline std::string field_line(const FieldSpec& f) {
  if (f.characteristic == 0) return "field char=0\n";
  std::string s = "field char=" + std::to_string(f.characteristic) +
                  " order=" + std::to_string(f.order());
  if (f.degree > 1) s += " modulus=" + f.modulus_string();
  return s + "\n";
}

enum class ScalarClass { zero, one, other };

inline ScalarClass classify(const Coeff& c, const FieldSpec& spec) {
  return with_field(spec, [&](const auto& field) {
    const auto v = c.evaluate(field);
    if (is_zero(v)) return ScalarClass::zero;
    if (v == field.one()) return ScalarClass::one;
    return ScalarClass::other;
  });
}

inline MatrixZ cartan_2B(long k, long s) { return MatrixZ{{4 * k, 2 * k}, {2 * k, k + s}}; }
inline MatrixZ cartan_3K(long a, long b, long c) {
  return MatrixZ{{a + b, a, b}, {a, a + c, c}, {b, c, b + c}};
}

}  // namespace detail

/// Builds the presentation and metadata of one family member over `field`.
inline CatalogEntry make_entry(const std::string& family, const Params& given, const FieldSpec& field,
                               const MakeOptions& options = {}) {
  const FamilyInfo& info = family_info(family);
  field.validate();
  CatalogEntry e;
  e.family = info.code;
  e.field = field;
  e.rep_type = info.rep;
  e.n_simples = info.simples;
  e.char_constraint = info.char2_only ? "char 2" : "";

  for (const auto& [k, v] : given) {
    const bool known =
        std::find(info.int_params.begin(), info.int_params.end(), k) != info.int_params.end() ||
        std::find(info.scalar_params.begin(), info.scalar_params.end(), k) != info.scalar_params.end();
    if (!known) throw ParameterConstraint(info.code + " has no parameter '" + k + "'");
  }
  std::map<std::string, long> iv;
  for (const auto& name : info.int_params) {
    auto it = given.find(name);
    if (it == given.end()) throw ParameterConstraint(info.code + " needs parameter " + name);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(it->second, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != it->second.size())
      throw ParameterConstraint("parameter " + name + " must be an integer, got '" + it->second + "'");
    if (v < 0 || v > 1000) throw ParameterConstraint("parameter " + name + " out of range");
    iv[name] = v;
    e.params.emplace_back(name, std::to_string(v));
  }
  for (const auto& name : info.scalar_params) {
    auto it = given.find(name);
    if (it == given.end()) throw ParameterConstraint(info.code + " needs parameter " + name);
    e.params.emplace_back(name, it->second);
  }

  std::string text = detail::field_line(field);
  text += detail::quiver_for(info);
  for (const auto& [k, v] : e.params) text += "param " + k + "=" + v + "\n";
  if (info.code == "A1" || info.code == "C1" || info.code == "B1") text += "commutative\n";
  for (const auto& r : detail::relations_for(info.code)) text += "relation " + r + "\n";

  auto I = [&](const char* n) { return iv.at(n); };
  unsigned hint = 8;
  if (info.code == "A1") hint = static_cast<unsigned>(I("m") + I("n") + 1);
  else if (info.code == "C1" || info.code == "B1") hint = 5;
  else if (info.simples == 1) hint = static_cast<unsigned>(2 * I("k") + 3);
  else if (info.simples == 2) hint = static_cast<unsigned>(3 * I("k") + I(info.code == "SD2B1" || info.code == "SD2B2" ? "t" : "s") + 3);
  else if (info.code == "D3R") hint = static_cast<unsigned>(3 * I("k") + I("s") + I("t") + I("u") + 3);
  else if (info.code != "Q3A1") hint = static_cast<unsigned>(2 * (I("a") + I("b") + I("c")) + 3);
  e.truncation_hint = hint;
  text += "truncate " + std::to_string(hint) + "\n";
  e.presentation = parse_presentation(text);

  // Constraints.
  std::vector<std::string> violated;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) violated.push_back(what);
  };
  auto sc = [&](const char* n) {
    return detail::classify(e.presentation.params.at(n).scalar, field);
  };
  using SC = detail::ScalarClass;
  const std::string& f = info.code;
  if (info.char2_only && field.characteristic != 2)
    throw CharConstraint(f + " is only defined in characteristic 2");
  if (f == "A1") {
    need(I("m") >= I("n"), "m >= n");
    need(I("n") >= 2, "n >= 2");
    need(I("m") + I("n") > 4, "m + n > 4");
  } else if (f == "D1A1" || f == "SD1A1" || f == "Q1A1") {
    need(I("k") >= 2, "k >= 2");
  } else if (f == "D1A2") {
    need(I("k") >= 2, "k >= 2");
    need(sc("d") != SC::other, "d in {0, 1}");
  } else if (f == "SD1A2" || f == "Q1A2") {
    need(I("k") >= 2, "k >= 2");
    need(!(sc("c") == SC::zero && sc("d") == SC::zero), "(c, d) != (0, 0)");
  } else if (f == "D2B") {
    need(I("k") >= I("s"), "k >= s");
    need(I("s") >= 1, "s >= 1");
    need(sc("c") != SC::other, "c in {0, 1}");
    if (sc("c") == SC::one && field.characteristic != 2)
      throw CharConstraint("D2B with c = 1 is only defined in characteristic 2");
  } else if (f == "SD2B1") {
    need(I("k") >= 1, "k >= 1");
    need(I("t") >= 2, "t >= 2");
    need(sc("c") != SC::other, "c in {0, 1}");
  } else if (f == "SD2B2") {
    need(I("k") >= 1, "k >= 1");
    need(I("t") >= 2, "t >= 2");
    need(I("k") + I("t") >= 4, "k + t >= 4");
    need(sc("c") != SC::other, "c in {0, 1}");
  } else if (f == "Q2B1") {
    need(I("k") >= 1, "k >= 1");
    need(I("s") >= 3, "s >= 3");
    need(sc("a") != SC::zero, "a != 0");
  } else if (f == "D3K") {
    need(I("a") >= I("b") && I("b") >= I("c") && I("c") >= 1, "a >= b >= c >= 1");
  } else if (f == "SD3K") {
    need(I("a") >= I("b") && I("b") >= I("c") && I("c") >= 1, "a >= b >= c >= 1");
    need(I("a") >= 2, "a >= 2");
  } else if (f == "Q3K") {
    need(I("a") >= I("b") && I("b") >= I("c") && I("c") >= 1, "a >= b >= c >= 1");
    need(I("b") >= 2, "b >= 2");
    need(!(I("a") == 2 && I("b") == 2 && I("c") == 1), "(a, b, c) != (2, 2, 1)");
  } else if (f == "D3R") {
    need(I("s") >= I("t") && I("t") >= I("u") && I("u") >= I("k") && I("k") >= 1,
         "s >= t >= u >= k >= 1");
    need(I("t") >= 2, "t >= 2");
  } else if (f == "Q3A1") {
    need(sc("d") == SC::other, "d not in {0, 1}");
  }
  // Exponents below 1 make the relations meaningless whatever the options say.
  for (const auto& [name, v] : iv)
    if (v < 1) throw ParameterConstraint(info.code + ": parameter " + name + " must be positive");
  if (!violated.empty()) {
    if (options.enforce_constraints) {
      std::string msg = e.label() + " violates";
      for (std::size_t i = 0; i < violated.size(); ++i) msg += (i ? ", " : " ") + violated[i];
      throw ParameterConstraint(msg);
    }
    e.waived = violated;
  }

  // Metadata and recorded values.
  e.special_biserial = info.rep == RepType::dihedral && f != "B1" && f != "D1A2" &&
                       !(f == "D2B" && sc("c") == SC::one);
  if (f == "A1") {
    const long mn = I("m") + I("n");
    e.expected.dim = static_cast<std::size_t>(mn);
    e.expected.dim_Z = static_cast<std::size_t>(mn);
    e.expected.cartan = MatrixZ{{mn}};
  } else if (f == "C1" || f == "B1") {
    e.expected.dim = 4;
    e.expected.dim_Z = 4;
    e.expected.cartan = MatrixZ{{4}};
  } else if (info.simples == 1) {
    const long k = I("k");
    e.expected.dim = static_cast<std::size_t>(4 * k);
    e.expected.dim_Z = static_cast<std::size_t>(k + 3);
    e.expected.cartan = MatrixZ{{4 * k}};
    if (info.rep != RepType::dihedral) e.expected.dim_R = 1;
  } else if (info.simples == 2) {
    const long k = I("k"), s = I(f == "SD2B1" || f == "SD2B2" ? "t" : "s");
    e.expected.cartan = detail::cartan_2B(k, s);
    e.expected.dim = static_cast<std::size_t>(e.expected.cartan->total().get_si());
    e.expected.det = 4 * k * s;
    if (info.rep != RepType::dihedral) {
      e.expected.dim_Z = static_cast<std::size_t>(k + s + 2);
      e.expected.dim_R = 2;
    }
  } else if (f == "Q3A1") {
    e.expected.cartan = MatrixZ{{4, 2, 2}, {2, 3, 1}, {2, 1, 3}};
    e.expected.dim = 20;
    e.expected.dim_Z = 6;
    e.expected.dim_R = 3;
  } else if (f != "D3R") {
    const long a = I("a"), b = I("b"), c = I("c");
    e.expected.cartan = detail::cartan_3K(a, b, c);
    e.expected.dim = static_cast<std::size_t>(e.expected.cartan->total().get_si());
    e.expected.det = 4 * a * b * c;
    e.expected.dim_R = 3;
    if (f == "Q3K" || f == "SD3K") e.expected.dim_Z = static_cast<std::size_t>(a + b + c + 1);
  }
  if (f == "D3R") e.note = "rho-cycle relation uses delta*lambda*beta";
  if (f == "SD3K") e.note = "first deformed relation read as delta*lambda-(gamma*beta)^(a-1)*gamma";
  return e;
}

inline CatalogEntry make_entry(const std::string& family, const std::string& params,
                               const FieldSpec& field, const MakeOptions& options = {}) {
  return make_entry(family, parse_params(params), field, options);
}

/// Wraps a user presentation. Parameters come from its `param` lines; the
/// representation type is unknown, so the classifier skips the type steps.
inline CatalogEntry entry_from_presentation(Presentation p, const std::string& name) {
  CatalogEntry e;
  e.family = name;
  e.field = p.field;
  e.n_simples = p.quiver.vertex_count;
  e.catalogued = false;
  for (const auto& [k, v] : p.params) e.params.emplace_back(k, v.text);
  if (p.truncation_hint) e.truncation_hint = *p.truncation_hint;
  e.presentation = std::move(p);
  return e;
}

struct BlockSpec {
  RepType rep;
  int defect;
  int simples;
};

inline int min_defect(RepType r) {
  switch (r) {
    case RepType::dihedral: return 2;
    case RepType::semidihedral: return 4;
    case RepType::quaternion: return 3;
  }
  return 2;
}

/// Derived-equivalence representatives of tame blocks over a field of
/// characteristic 2 (F_2 unless another field is given). Parameters are
/// instantiated with 2^(n-2); representatives outside their family's stated
/// range are built with the violated constraints recorded in `waived`.
inline std::vector<CatalogEntry> tame_block_entries(const BlockSpec& b,
                                                    const FieldSpec& field = FieldSpec::prime(2)) {
  if (field.characteristic != 2) throw CharConstraint("tame blocks are taken in characteristic 2");
  if (b.simples < 1 || b.simples > 3) throw ParameterConstraint("blocks have 1, 2 or 3 simples");
  const int lo = min_defect(b.rep) + (b.rep == RepType::dihedral && b.simples == 2 ? 1 : 0);
  if (b.defect < lo || b.defect > 12)
    throw ParameterConstraint("defect " + std::to_string(b.defect) + " outside " + std::to_string(lo) +
                              "..12 for this block type");
  const std::string q = std::to_string(1L << (b.defect - 2));
  MakeOptions loose{false};
  std::vector<CatalogEntry> out;
  switch (b.rep) {
    case RepType::dihedral:
      if (b.simples == 1) {
        if (b.defect == 2) out.push_back(make_entry("C1", Params{}, field));
        else out.push_back(make_entry("D1A1", Params{{"k", q}}, field));
      } else if (b.simples == 2) {
        for (const char* c : {"0", "1"})
          out.push_back(make_entry("D2B", Params{{"k", "1"}, {"s", q}, {"c", c}}, field, loose));
      } else {
        out.push_back(make_entry("D3K", Params{{"a", q}, {"b", "1"}, {"c", "1"}}, field));
      }
      break;
    case RepType::semidihedral:
      if (b.simples == 1) {
        out.push_back(make_entry("SD1A1", Params{{"k", q}}, field));
      } else if (b.simples == 2) {
        for (const char* c : {"0", "1"})
          out.push_back(make_entry("SD2B1", Params{{"k", "1"}, {"t", q}, {"c", c}}, field));
        for (const char* c : {"0", "1"})
          out.push_back(make_entry("SD2B2", Params{{"k", "2"}, {"t", q}, {"c", c}}, field));
      } else {
        out.push_back(make_entry("SD3K", Params{{"a", q}, {"b", "2"}, {"c", "1"}}, field));
      }
      break;
    case RepType::quaternion:
      if (b.simples == 1) {
        out.push_back(make_entry("Q1A1", Params{{"k", q}}, field));
      } else if (b.simples == 2) {
        for (const char* c : {"0", "1"})
          out.push_back(make_entry("Q2B1", Params{{"k", "2"}, {"s", q}, {"a", "1"}, {"c", c}}, field, loose));
      } else {
        out.push_back(make_entry("Q3K", Params{{"a", q}, {"b", "2"}, {"c", "2"}}, field));
      }
      break;
  }
  return out;
}

}  // namespace tamesym
