#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"

#include "tamesym/catalog.hpp"

namespace tamesym {

/// A pair pattern the classification leaves undecided. Matches two entries of
/// the given families (in either order) that agree on every parameter in
/// `same`.
struct OpenCase {
  std::string id;
  std::string family_a;
  std::string family_b;
  std::vector<std::string> same;
  std::string note;
};

inline constexpr const char* kOpenCaseTableVersion = "1";

inline const std::vector<OpenCase>& default_open_cases() {
  static const std::vector<OpenCase> table = {
      {"d1a2-scalar", "D1A2", "D1A2", {"k"}, "d = 0 against d = 1 is unresolved"},
      {"sd1a-scalar", "SD1A1", "SD1A2", {"k"}, "only k is known to separate one-simple semidihedral algebras"},
      {"sd1a2-scalar", "SD1A2", "SD1A2", {"k"}, "only k is known to separate one-simple semidihedral algebras"},
      {"sd2b1-scalar", "SD2B1", "SD2B1", {"k", "t"}, "c = 0 against c = 1 outside the Reynolds-ideal theorem"},
      {"sd2b2-scalar", "SD2B2", "SD2B2", {"k", "t"}, "c = 0 against c = 1 outside the Reynolds-ideal theorem"},
      {"sd2b-cross", "SD2B1", "SD2B2", {"k", "t"}, "the two SD(2B) families at equal parameters"},
      {"q1a-scalar", "Q1A1", "Q1A2", {"k"}, "only k is known to separate one-simple quaternion algebras"},
      {"q1a2-scalar", "Q1A2", "Q1A2", {"k"}, "only k is known to separate one-simple quaternion algebras"},
      {"q2b1-scalar", "Q2B1", "Q2B1", {"k", "s"}, "different (a, c) at fixed (k, s)"},
      {"q3a1-scalar", "Q3A1", "Q3A1", {}, "different d"},
  };
  return table;
}

inline nlohmann::json to_json(const std::vector<OpenCase>& table) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : table)
    cases.push_back({{"id", c.id}, {"families", {c.family_a, c.family_b}}, {"same", c.same}, {"note", c.note}});
  return {{"version", kOpenCaseTableVersion}, {"cases", cases}};
}

inline std::vector<OpenCase> open_cases_from_json(const nlohmann::json& j) {
  std::vector<OpenCase> out;
  for (const auto& c : j.at("cases")) {
    const auto& fam = c.at("families");
    if (!fam.is_array() || fam.size() != 2) throw ParameterConstraint("open case needs two families");
    OpenCase oc{c.at("id").get<std::string>(), fam[0].get<std::string>(), fam[1].get<std::string>(),
                c.at("same").get<std::vector<std::string>>(), c.value("note", "")};
    family_info(oc.family_a);
    family_info(oc.family_b);
    out.push_back(std::move(oc));
  }
  return out;
}

inline const std::string* param_value(const CatalogEntry& e, const std::string& name) {
  for (const auto& [k, v] : e.params)
    if (k == name) return &v;
  return nullptr;
}

inline bool matches(const OpenCase& c, const CatalogEntry& x, const CatalogEntry& y) {
  const bool fams = (x.family == c.family_a && y.family == c.family_b) ||
                    (x.family == c.family_b && y.family == c.family_a);
  if (!fams) return false;
  return std::all_of(c.same.begin(), c.same.end(), [&](const std::string& p) {
    const auto* a = param_value(x, p);
    const auto* b = param_value(y, p);
    return a && b && *a == *b;
  });
}

inline const OpenCase* find_open_case(const CatalogEntry& x, const CatalogEntry& y,
                                      const std::vector<OpenCase>& table = default_open_cases()) {
  for (const auto& c : table)
    if (matches(c, x, y)) return &c;
  return nullptr;
}

}  // namespace tamesym
