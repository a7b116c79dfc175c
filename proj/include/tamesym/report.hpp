#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "tamesym/classifier.hpp"

namespace tamesym {

inline constexpr const char* kReportSchema = "tamesym.report/1";

using nlohmann::json;

inline json mpz_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline json to_json(const Fingerprint& f) {
  return {{"dim", f.dim},
          {"loewy_dims", f.loewy_dims},
          {"socle_series_dims", f.socle_series_dims},
          {"min_generators", f.min_generators},
          {"characteristic", f.characteristic},
          {"extension_degree", f.extension_degree},
          {"frobenius_kernel_dims", f.frobenius_kernel_dims},
          {"frobenius_image_dims", f.frobenius_image_dims}};
}

inline Fingerprint fingerprint_from_json(const json& j) {
  Fingerprint f;
  f.dim = j.at("dim").get<std::size_t>();
  f.loewy_dims = j.at("loewy_dims").get<std::vector<std::size_t>>();
  f.socle_series_dims = j.at("socle_series_dims").get<std::vector<std::size_t>>();
  f.min_generators = j.at("min_generators").get<std::size_t>();
  f.characteristic = j.at("characteristic").get<std::uint32_t>();
  f.extension_degree = j.at("extension_degree").get<unsigned>();
  f.frobenius_kernel_dims = j.at("frobenius_kernel_dims").get<std::vector<std::size_t>>();
  f.frobenius_image_dims = j.at("frobenius_image_dims").get<std::vector<std::size_t>>();
  return f;
}

inline json entry_json(const CatalogEntry& e) {
  json params = json::object();
  for (const auto& [k, v] : e.params) params[k] = v;
  json j = {{"family", e.family}, {"params", params}, {"field", e.field.to_string()}, {"label", e.label()}};
  if (!e.waived.empty()) j["waived"] = e.waived;
  return j;
}

inline json to_json(const MoritaFingerprint& m) {
  json G = json::array();
  for (const auto& d : m.stable_grothendieck.torsion) G.push_back(mpz_json(d));
  json divs = json::array();
  for (const auto& d : m.cartan_divisors) divs.push_back(mpz_json(d));
  json cartan = json::array();
  for (std::size_t i = 0; i < m.cartan.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cartan.cols(); ++j) row.push_back(mpz_json(m.cartan.at(i, j)));
    cartan.push_back(row);
  }
  json kfps = json::array();
  for (const auto& f : m.kuelshammer_fps) kfps.push_back(to_json(f));
  json checks = json::object();
  for (const auto& [k, v] : m.checks) checks[k] = v;
  return {{"label", m.label},
          {"field", m.field},
          {"rep_type", m.catalogued ? json(to_string(m.rep_type)) : json(nullptr)},
          {"n_simples", m.n_simples},
          {"special_biserial", m.catalogued ? json(m.special_biserial) : json(nullptr)},
          {"dim_A", m.dim_A},
          {"dim_Z", m.dim_Z},
          {"dim_Zpr", m.dim_Zpr},
          {"dim_Zst", m.dim_Zst},
          {"dim_R", m.dim_R},
          {"dim_soc", m.dim_soc},
          {"cartan", cartan},
          {"cartan_divisors", divs},
          {"cartan_det_abs", mpz_json(m.cartan_det_abs)},
          {"G0st", G},
          {"G0st_free_rank", m.stable_grothendieck.free_rank},
          {"fp_Z", to_json(m.fp_Z)},
          {"fp_Z_mod_R", to_json(m.fp_Z_mod_R)},
          {"fp_Zst", to_json(m.fp_Zst)},
          {"loewy_Zst", m.loewy_Zst},
          {"kuelshammer_fps", kfps},
          {"t_perp_dims", m.t_perp_dims},
          {"truncation", m.truncation},
          {"checks", checks}};
}

inline json to_json(const Verdict& v) {
  json j = {{"outcome", to_string(v.outcome)}};
  if (v.outcome == Outcome::Distinguished) {
    j["invariant"] = v.invariant;
    j["values"] = {v.value_a, v.value_b};
  }
  if (v.outcome == Outcome::NotDistinguished) {
    j["known_open"] = v.known_open;
    if (!v.open_case.empty()) j["open_case"] = v.open_case;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline json invariants_report(const CatalogEntry& e, const MoritaFingerprint& m) {
  return {{"schema", kReportSchema}, {"kind", "invariants"}, {"entry", entry_json(e)}, {"invariants", to_json(m)}};
}

inline json compare_report(const CatalogEntry& a, const CatalogEntry& b, const Verdict& v) {
  return {{"schema", kReportSchema},
          {"kind", "compare"},
          {"a", entry_json(a)},
          {"b", entry_json(b)},
          {"verdict", to_json(v)}};
}

/// A rendered table: header plus rows of cells, shared by markdown and CSV.
struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string to_markdown(const Table& t) {
  std::ostringstream o;
  if (!t.title.empty()) o << "### " << t.title << "\n\n";
  auto line = [&](const std::vector<std::string>& cells) {
    o << "|";
    for (const auto& c : cells) o << " " << c << " |";
    o << "\n";
  };
  line(t.header);
  o << "|";
  for (std::size_t i = 0; i < t.header.size(); ++i) o << "---|";
  o << "\n";
  for (const auto& r : t.rows) line(r);
  return o.str();
}

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

inline std::string to_csv(const Table& t) {
  std::ostringstream o;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) o << (i ? "," : "") << csv_cell(cells[i]);
    o << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return o.str();
}

inline json to_json(const Table& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row = json::object();
    for (std::size_t i = 0; i < t.header.size() && i < r.size(); ++i) row[t.header[i]] = r[i];
    rows.push_back(row);
  }
  return {{"title", t.title}, {"columns", t.header}, {"rows", rows}};
}

inline std::string g0st_string(const MoritaFingerprint& m) { return m.stable_grothendieck.to_string(); }

/// Entries of the one-simple dihedral tables in the given characteristic.
inline std::vector<CatalogEntry> dihedral_one_simple_entries(const FieldSpec& field) {
  std::vector<CatalogEntry> out;
  for (const auto& mn : {"m=3,n=2", "m=4,n=2", "m=3,n=3"}) out.push_back(make_entry("A1", mn, field));
  out.push_back(make_entry("C1", Params{}, field));
  for (const char* k : {"k=2", "k=3"}) out.push_back(make_entry("D1A1", k, field));
  if (field.characteristic == 2) {
    out.push_back(make_entry("B1", Params{}, field));
    for (const char* p : {"k=2,d=0", "k=2,d=1", "k=3,d=0", "k=3,d=1"}) out.push_back(make_entry("D1A2", p, field));
  }
  return out;
}

inline Table dihedral_one_simple_table(const FieldSpec& field, FingerprintCache& cache) {
  auto entries = dihedral_one_simple_entries(field);
  cache.warm(entries);
  Table t{"dihedral, one simple module, " + field.to_string(),
          {"entry", "dim A", "dim Z", "dim Zpr", "dim Zst", "C_A", "G0st"},
          {}};
  for (const auto& e : entries) {
    const auto m = cache.get(e);
    t.rows.push_back({e.label(), std::to_string(m->dim_A), std::to_string(m->dim_Z), std::to_string(m->dim_Zpr),
                      std::to_string(m->dim_Zst), m->cartan.to_string(), g0st_string(*m)});
  }
  return t;
}

inline Table block_rows_table(const BlockTable& b) {
  Table t{"blocks, " + to_string(b.rep) + " defect groups",
          {"n", "simples", "entry", "dim A", "dim Z", "dim Zst", "|det C|", "G0st"},
          {}};
  for (const auto& r : b.rows)
    t.rows.push_back({std::to_string(r.defect), std::to_string(r.simples), r.entry.label(),
                      std::to_string(r.fp->dim_A), std::to_string(r.fp->dim_Z), std::to_string(r.fp->dim_Zst),
                      r.fp->cartan_det_abs.get_str(), g0st_string(*r.fp)});
  return t;
}

inline Table block_pairs_table(const BlockTable& b) {
  Table t{"pairwise verdicts, " + to_string(b.rep) + " blocks", {"n", "a", "b", "verdict", "invariant"}, {}};
  for (const auto& p : b.pairs) {
    const auto& v = p.verdict;
    t.rows.push_back({std::to_string(b.rows[p.a].defect), b.rows[p.a].entry.label(), b.rows[p.b].entry.label(),
                      v.outcome == Outcome::NotDistinguished
                          ? std::string("NotDistinguished") + (v.known_open ? " (open)" : "")
                          : to_string(v.outcome),
                      v.invariant.empty() ? v.open_case : v.invariant});
  }
  return t;
}

}  // namespace tamesym
