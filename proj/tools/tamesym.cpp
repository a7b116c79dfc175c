// tamesym: build tame symmetric algebras, print invariants, compare, run the acceptance suite.
//
// Exit codes: 0 success (Distinguished or Identical for compare), 1 internal
// failure or failed selftest, 2 invalid input or violated parameter
// constraint, 3 NotDistinguished on a listed open case, 4 NotDistinguished
// otherwise.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "tamesym/acceptance.hpp"
#include "tamesym/report.hpp"

namespace {

using namespace tamesym;

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitOpen = 3;
constexpr int kExitUnexpected = 4;

struct FieldFlags {
  std::uint32_t characteristic = 0;
  std::uint64_t order = 0;
  std::string modulus;
  bool given = false;

  void add(CLI::App* app) {
    app->add_option("--char", characteristic, "0 or a prime")->each([this](const std::string&) { given = true; });
    app->add_option("--field-order", order, "p^m, default p");
    app->add_option("--modulus", modulus, "monic irreducible polynomial in x, e.g. x^2+x+1");
  }

  FieldSpec spec() const {
    std::optional<std::vector<std::uint32_t>> mod;
    if (!modulus.empty()) {
      if (characteristic == 0) throw InvalidField("--modulus needs a positive characteristic");
      mod = detail::parse_modulus(modulus, characteristic, 0, 0);
    }
    return FieldSpec::of_order(characteristic, order, mod);
  }
};

struct EntryFlags {
  std::string family;
  std::string params;
  std::string file;

  void add(CLI::App* app, const std::string& prefix = "") {
    app->add_option("--" + prefix + "family", family, "family code, e.g. D1A1, SD2B1, Q3K");
    app->add_option("--" + prefix + "params", params, "k=2,s=3,c=1");
    app->add_option("--" + prefix + "presentation-file", file, "DSL file instead of a family")->check(CLI::ExistingFile);
  }

  CatalogEntry entry(const FieldFlags& f) const {
    if (!file.empty()) {
      if (!family.empty()) throw ParameterConstraint("give a family or a presentation file, not both");
      std::ifstream in(file);
      std::stringstream text;
      text << in.rdbuf();
      auto p = parse_presentation(text.str());
      if (f.given) p.field = f.spec();
      const auto slash = file.find_last_of('/');
      return entry_from_presentation(std::move(p), file.substr(slash == std::string::npos ? 0 : slash + 1));
    }
    if (family.empty()) throw ParameterConstraint("a family or a presentation file is required");
    return make_entry(family, params, f.spec());
  }
};

std::string format_opt = "md";

void add_format(CLI::App* app, std::vector<std::string> allowed) {
  app->add_option("--format", format_opt, "output format")->check(CLI::IsMember(std::move(allowed)));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit(const std::vector<Table>& ts) {
  if (format_opt == "json") {
    json arr = json::array();
    for (const auto& t : ts) arr.push_back(to_json(t));
    emit(json{{"schema", kReportSchema}, {"kind", "tables"}, {"tables", arr}});
    return;
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) std::cout << "\n";
    std::cout << (format_opt == "csv" ? to_csv(ts[i]) : to_markdown(ts[i]));
  }
}

Table invariants_table(const CatalogEntry& e, const MoritaFingerprint& m) {
  Table t{e.label() + " over " + e.field.to_string(), {"invariant", "value"}, {}};
  auto row = [&](const std::string& k, const std::string& v) { t.rows.push_back({k, v}); };
  if (m.catalogued) {
    row("rep_type", to_string(m.rep_type));
    row("special_biserial", m.special_biserial ? "true" : "false");
  }
  row("simples", std::to_string(m.n_simples));
  row("dim A", std::to_string(m.dim_A));
  row("dim Z", std::to_string(m.dim_Z));
  row("dim Zpr", std::to_string(m.dim_Zpr));
  row("dim Zst", std::to_string(m.dim_Zst));
  row("dim R", std::to_string(m.dim_R));
  row("dim soc", std::to_string(m.dim_soc));
  row("C_A", m.cartan.to_string());
  row("|det C|", m.cartan_det_abs.get_str());
  row("G0st", g0st_string(m));
  row("Z", m.fp_Z.to_string());
  row("Z/R", m.fp_Z_mod_R.to_string());
  row("Zst", m.fp_Zst.to_string());
  row("Loewy length Zst", std::to_string(m.loewy_Zst));
  for (std::size_t n = 0; n < m.kuelshammer_fps.size(); ++n)
    row("Z/T_" + std::to_string(n + 1) + "^perp", m.kuelshammer_fps[n].to_string());
  for (const auto& [name, ok] : m.checks) row("check: " + name, ok ? "ok" : "FAILED");
  return t;
}

int verdict_exit(const Verdict& v) {
  if (v.outcome != Outcome::NotDistinguished) return 0;
  return v.known_open ? kExitOpen : kExitUnexpected;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(s);
      return {n, n};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw ParameterConstraint("defect range '" + s + "' is not lo..hi");
  }
}

std::vector<Table> block_tables(RepType rep, const std::string& defect, FingerprintCache& cache) {
  auto [lo, hi] = parse_range(defect);
  if (lo < min_defect(rep))
    throw ParameterConstraint(to_string(rep) + " blocks need defect n >= " + std::to_string(min_defect(rep)));
  const auto b = block_table(rep, lo, hi, cache);
  return {block_rows_table(b), block_pairs_table(b)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of tame symmetric algebras under stable equivalence of Morita type"};
  app.require_subcommand(1);

  FieldFlags field;
  EntryFlags one, a, b;
  FingerprintCache cache;

  auto* inv = app.add_subcommand("invariants", "fingerprint of one algebra");
  one.add(inv);
  field.add(inv);
  add_format(inv, {"json", "md", "csv"});

  std::string section;
  std::string defect;
  auto* table = app.add_subcommand("table", "tables recomputed from the catalog");
  table->add_option("--section", section, "dihedral-1 | blocks-dihedral | blocks-semidihedral | blocks-quaternion")
      ->required()
      ->check(CLI::IsMember({"dihedral-1", "blocks-dihedral", "blocks-semidihedral", "blocks-quaternion"}));
  table->add_option("--defect", defect, "defect range lo..hi for block sections");
  field.add(table);
  add_format(table, {"json", "md", "csv"});

  auto* cmp = app.add_subcommand("compare", "classify a pair");
  a.add(cmp, "a-");
  b.add(cmp, "b-");
  field.add(cmp);
  add_format(cmp, {"json", "md"});

  std::string rep_name;
  auto* blocks = app.add_subcommand("blocks", "block representatives and pairwise verdicts");
  blocks->add_option("--rep", rep_name, "dihedral | semidihedral | quaternion")
      ->required()
      ->check(CLI::IsMember({"dihedral", "semidihedral", "quaternion"}));
  blocks->add_option("--defect", defect, "defect range lo..hi");
  add_format(blocks, {"json", "md", "csv"});

  std::vector<std::uint32_t> chars{0, 2, 3, 5};
  int bound = 4;
  auto* s7 = app.add_subcommand("section7", "algebras with different numbers of simples");
  s7->add_option("--chars", chars, "characteristics")->delimiter(',');
  s7->add_option("--bound", bound, "parameter bound")->check(CLI::Range(2, 6));
  add_format(s7, {"json", "md", "csv"});

  AcceptanceOptions acc;
  std::vector<int> only;
  auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
  self->add_flag("--quick", acc.quick, "reduced ranges");
  self->add_option("--inject-fault", acc.inject_fault, "plant a known fault")->check(CLI::IsMember({"cartan"}));
  self->add_option("--only", only, "criteria to run")->check(CLI::Range(1, 9))->delimiter(',');

  std::string parse_file;
  auto* pc = app.add_subcommand("parse-check", "parse a DSL file and build the algebra");
  pc->add_option("file", parse_file, "presentation file")->required()->check(CLI::ExistingFile);
  add_format(pc, {"json", "md"});

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inv) {
      const auto e = one.entry(field);
      const auto m = morita_fingerprint(e);
      if (format_opt == "json")
        emit(invariants_report(e, m));
      else
        emit(std::vector<Table>{invariants_table(e, m)});
      return m.all_checks_pass() ? 0 : kExitInternal;
    }
    if (*table) {
      if (section == "dihedral-1") {
        emit(std::vector<Table>{dihedral_one_simple_table(field.spec(), cache)});
        return 0;
      }
      if (field.given && (field.characteristic != 2 || field.order > 2))
        throw CharConstraint("block tables are over F_2");
      const auto rep = rep_type_from_string(section.substr(std::string("blocks-").size()));
      emit(block_tables(rep, defect.empty() ? std::to_string(std::max(3, min_defect(rep))) + "..5" : defect, cache));
      return 0;
    }
    if (*cmp) {
      const auto x = a.entry(field);
      const auto y = b.entry(field);
      const auto v = compare(x, y, &cache);
      if (format_opt == "json") {
        emit(compare_report(x, y, v));
      } else {
        Table t{"comparison over " + x.field.to_string(), {"a", "b", "verdict"}, {{x.label(), y.label(), v.to_string()}}};
        emit(std::vector<Table>{t});
      }
      return verdict_exit(v);
    }
    if (*blocks) {
      const auto rep = rep_type_from_string(rep_name);
      emit(block_tables(rep, defect.empty() ? std::to_string(std::max(3, min_defect(rep))) + "..5" : defect, cache));
      return 0;
    }
    if (*s7) {
      std::vector<FieldSpec> fields;
      for (auto c : chars) fields.push_back(c == 0 ? FieldSpec::rationals() : FieldSpec::prime(c));
      const auto r = section7_suite(fields, cache, bound);
      Table t{"different numbers of simple modules", {"field", "a", "b", "verdict"}, {}};
      for (const auto& [x, y, v] : r.pairs) t.rows.push_back({x.field.to_string(), x.label(), y.label(), v.to_string()});
      emit(std::vector<Table>{t});
      for (const auto& e : r.errors) std::cerr << "error: " << e << "\n";
      return r.failures == 0 && r.errors.empty() ? 0 : kExitUnexpected;
    }
    if (*self) {
      AcceptanceSuite suite(acc);
      if (only.empty())
        for (int i = 1; i <= 9; ++i) only.push_back(i);
      bool ok = true;
      for (int id : only) {
        const auto r = suite.run(id);
        std::cout << format_result(r) << std::flush;
        ok = ok && r.pass;
      }
      return ok ? 0 : kExitInternal;
    }
    if (*pc) {
      std::ifstream in(parse_file);
      std::stringstream text;
      text << in.rdbuf();
      const auto p = parse_presentation(text.str());
      const auto dim = with_field(p.field, [&](const auto& f) { return build_algebra(p, f).dim(); });
      if (format_opt == "json") {
        emit(json{{"schema", kReportSchema},
                  {"kind", "parse-check"},
                  {"field", p.field.to_string()},
                  {"vertices", p.quiver.vertex_count},
                  {"arrows", p.quiver.arrows.size()},
                  {"relations", p.effective_relations().size()},
                  {"dim", dim}});
      } else {
        std::cout << parse_file << ": ok, " << p.quiver.vertex_count << " vertices, " << p.quiver.arrows.size()
                  << " arrows, " << p.effective_relations().size() << " relations, dim " << dim << " over "
                  << p.field.to_string() << "\n";
      }
      return 0;
    }
  } catch (const PresentationError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const ParameterConstraint& ex) {
    std::cerr << "constraint violated: " << ex.what() << "\n";
    return kExitInput;
  } catch (const CharConstraint& ex) {
    std::cerr << "constraint violated: " << ex.what() << "\n";
    return kExitInput;
  } catch (const CharMismatch& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const InvalidField& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const InvalidPrime& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
