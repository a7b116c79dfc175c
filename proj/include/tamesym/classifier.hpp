#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "tamesym/catalog.hpp"
#include "tamesym/invariants.hpp"
#include "tamesym/kuelshammer.hpp"
#include "tamesym/open_cases.hpp"

namespace tamesym {

/// Levels of the Kuelshammer chain compared by the classifier.
inline constexpr unsigned kCompareLevels = 3;

struct MoritaFingerprint {
  std::string label;
  std::string field;
  RepType rep_type = RepType::dihedral;
  int n_simples = 0;
  bool special_biserial = false;
  bool catalogued = true;
  std::size_t dim_A = 0;
  std::size_t dim_Z = 0;
  std::size_t dim_Zpr = 0;
  std::size_t dim_Zst = 0;
  std::size_t dim_R = 0;
  std::size_t dim_soc = 0;
  MatrixZ cartan;
  std::vector<mpz_class> cartan_divisors;
  mpz_class cartan_det_abs;
  StableGrothendieck stable_grothendieck;
  Fingerprint fp_Z;
  Fingerprint fp_Z_mod_R;
  Fingerprint fp_Zst;
  std::size_t loewy_Zst = 0;
  std::vector<Fingerprint> kuelshammer_fps;  // n = 1..kCompareLevels, char p only
  std::vector<std::size_t> t_perp_dims;      // n = 1.. until T_n^perp = R(A)
  unsigned truncation = 0;
  std::vector<std::pair<std::string, bool>> checks;

  bool all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
  }
};

namespace detail {

template <ExactField F>
MoritaFingerprint morita_fingerprint_over(const CatalogEntry& e, const F& field) {
  MoritaFingerprint m;
  m.label = e.label();
  m.field = e.field.to_string();
  m.rep_type = e.rep_type;
  m.n_simples = e.n_simples;
  m.special_biserial = e.special_biserial;
  m.catalogued = e.catalogued;

  const auto a = build_algebra(e.presentation, field);
  m.dim_A = a.dim();
  m.truncation = a.truncation();
  m.cartan = a.cartan_matrix();
  const auto snf = smith_normal_form(m.cartan);
  m.cartan_divisors = snf.divisors;
  m.cartan_det_abs = abs(bareiss_determinant(m.cartan));
  m.stable_grothendieck = stable_grothendieck(m.cartan);

  const auto commutators = commutator_space(a);
  const auto Z = centre(a);
  const auto soc = a.socle();
  const auto lambda = symmetrizing_form(a, commutators);
  const auto H = higman_ideal(a, lambda, Z.subspace, soc);
  const auto R = reynolds_ideal(Z.subspace, soc);
  m.dim_Z = Z.subspace.dim();
  m.dim_Zpr = H.dim();
  m.dim_Zst = m.dim_Z - m.dim_Zpr;
  m.dim_R = R.dim();
  m.dim_soc = soc.dim();

  m.fp_Z = fingerprint(Z.algebra);
  const auto Zst = quotient_comm(Z.algebra, in_coordinates(Z.subspace, H));
  m.fp_Zst = fingerprint(Zst);
  m.loewy_Zst = loewy_length(Zst);
  m.fp_Z_mod_R = fingerprint(quotient_comm(Z.algebra, in_coordinates(Z.subspace, R)));

  m.checks.emplace_back("truncation certified", m.truncation > 0);
  m.checks.emplace_back("associativity", a.check_associativity());
  m.checks.emplace_back("unit", a.check_unit());
  m.checks.emplace_back("perp of commutators is the centre", perp(commutators, lambda, a) == Z.subspace);
  m.checks.emplace_back("Higman inside socle and centre", soc.contains(H) && Z.subspace.contains(H));
  m.checks.emplace_back("dim Higman = Cartan rank",
                        H.dim() == rank_in_characteristic(m.cartan, field.characteristic()));
  mpz_class prod = 1;
  bool chain = true;
  for (std::size_t i = 0; i < snf.divisors.size(); ++i) {
    prod *= snf.divisors[i];
    if (i + 1 < snf.divisors.size() && snf.divisors[i + 1] % snf.divisors[i] != 0) chain = false;
  }
  m.checks.emplace_back("Smith divisibility chain", chain);
  if (m.cartan_det_abs != 0) m.checks.emplace_back("product of divisors = |det|", prod == m.cartan_det_abs);

  if constexpr (is_finite_field_v<F>) {
    std::optional<Subspace<F>> previous;
    bool nested = true;
    bool reached_R = false;
    for (unsigned n = 1; n <= kMaxKuelshammerLevel; ++n) {
      if (n > kCompareLevels && reached_R) break;
      auto t = kuelshammer_quotient(a, n, Z, commutators, lambda);
      if (n <= kCompareLevels) m.kuelshammer_fps.push_back(t.quotient_fp);
      if (!reached_R) m.t_perp_dims.push_back(t.t_perp.dim());
      if (previous && !previous->contains(t.t_perp)) nested = false;
      if (!t.t_perp.contains(R)) nested = false;
      if (R.contains(t.t_perp)) reached_R = true;
      previous = std::move(t.t_perp);
    }
    m.checks.emplace_back("T_n^perp descending and containing R", nested);
    m.checks.emplace_back("T_n^perp reaches R", reached_R);
  }
  return m;
}

}  // namespace detail

inline MoritaFingerprint morita_fingerprint(const CatalogEntry& e) {
  return with_field(e.field, [&](const auto& field) { return detail::morita_fingerprint_over(e, field); });
}

/// Computed values that disagree with the entry's recorded expectations.
/// Cartan matrices are compared up to a simultaneous relabelling of vertices.
inline bool same_up_to_relabelling(const MatrixZ& x, const MatrixZ& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols()) return false;
  std::vector<std::size_t> perm(x.rows());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < perm.size(); ++i)
      for (std::size_t j = 0; ok && j < perm.size(); ++j) ok = x.at(perm[i], perm[j]) == y.at(i, j);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<std::string> expectation_mismatches(const CatalogEntry& e, const MoritaFingerprint& m) {
  std::vector<std::string> out;
  const auto& x = e.expected;
  auto num = [&](const char* what, std::optional<std::size_t> want, std::size_t got) {
    if (want && *want != got)
      out.push_back(std::string(what) + " expected " + std::to_string(*want) + " got " + std::to_string(got));
  };
  num("dim A", x.dim, m.dim_A);
  num("dim Z", x.dim_Z, m.dim_Z);
  num("dim R", x.dim_R, m.dim_R);
  if (x.cartan && !same_up_to_relabelling(*x.cartan, m.cartan))
    out.push_back("Cartan expected " + x.cartan->to_string() + " got " + m.cartan.to_string());
  if (x.det && mpz_class(std::abs(*x.det)) != m.cartan_det_abs)
    out.push_back("|det C| expected " + std::to_string(std::abs(*x.det)) + " got " + m.cartan_det_abs.get_str());
  return out;
}

/// Thread-safe memo of fingerprints keyed by entry label and field.
class FingerprintCache {
 public:
  using Ptr = std::shared_ptr<const MoritaFingerprint>;

  Ptr get(const CatalogEntry& e) {
    const auto key = e.label() + " @ " + e.field.to_string();
    std::shared_future<Ptr> fut;
    std::promise<Ptr> mine;
    bool owner = false;
    {
      std::lock_guard lock(mu_);
      auto it = slots_.find(key);
      if (it == slots_.end()) {
        fut = mine.get_future().share();
        slots_.emplace(key, Slot{e, fut});
        owner = true;
      } else {
        fut = it->second.result;
      }
    }
    if (owner) {
      try {
        mine.set_value(std::make_shared<const MoritaFingerprint>(morita_fingerprint(e)));
      } catch (...) {
        mine.set_exception(std::current_exception());
      }
    }
    return fut.get();
  }

  /// Computes every entry, spreading work over the hardware threads.
  void warm(const std::vector<CatalogEntry>& entries) {
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next++) < entries.size();) {
        try {
          get(entries[i]);
        } catch (...) {
          // Rethrown when the entry is requested again.
        }
      }
    };
    if (workers == 1) return work();
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  struct Item {
    CatalogEntry entry;
    Ptr fp;            // null when the computation threw
    std::string error;
  };

  /// Every entry requested so far, in key order.
  std::vector<Item> items() const {
    std::vector<std::pair<CatalogEntry, std::shared_future<Ptr>>> copy;
    {
      std::lock_guard lock(mu_);
      for (const auto& [k, slot] : slots_) copy.emplace_back(slot.entry, slot.result);
    }
    std::vector<Item> out;
    for (auto& [e, f] : copy) {
      Item it{e, nullptr, ""};
      try {
        it.fp = f.get();
      } catch (const std::exception& ex) {
        it.error = ex.what();
      }
      out.push_back(std::move(it));
    }
    return out;
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return slots_.size();
  }

 private:
  struct Slot {
    CatalogEntry entry;
    std::shared_future<Ptr> result;
  };
  mutable std::mutex mu_;
  std::map<std::string, Slot> slots_;
};

enum class Outcome { Distinguished, NotDistinguished, Identical };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Distinguished: return "Distinguished";
    case Outcome::NotDistinguished: return "NotDistinguished";
    case Outcome::Identical: return "Identical";
  }
  return "?";
}

struct Verdict {
  Outcome outcome = Outcome::NotDistinguished;
  std::string invariant;  // Distinguished only
  std::string value_a;
  std::string value_b;
  bool known_open = false;
  std::string open_case;  // id from the open-case table
  std::string note;

  std::string to_string() const {
    switch (outcome) {
      case Outcome::Distinguished: return "Distinguished(" + invariant + ": " + value_a + " vs " + value_b + ")";
      case Outcome::Identical: return "Identical";
      case Outcome::NotDistinguished:
        return std::string("NotDistinguished(known_open=") + (known_open ? "true" : "false") +
               (open_case.empty() ? "" : ", " + open_case) + ")";
    }
    return "?";
  }
};

/// One comparison step: its name and a rendering of the value it compares.
/// Equal renderings mean equal values.
struct InvariantStep {
  std::string name;
  std::function<std::optional<std::string>(const MoritaFingerprint&)> value;
};

inline std::string render(const std::vector<mpz_class>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

inline const std::vector<InvariantStep>& invariant_order() {
  static const std::vector<InvariantStep> steps = [] {
    std::vector<InvariantStep> s = {
        {"rep_type",
         [](const MoritaFingerprint& m) -> std::optional<std::string> {
           if (!m.catalogued) return std::nullopt;
           return to_string(m.rep_type);
         }},
        {"special_biserial",
         [](const MoritaFingerprint& m) -> std::optional<std::string> {
           if (!m.catalogued) return std::nullopt;
           return m.special_biserial ? "true" : "false";
         }},
        {"stable_grothendieck",
         [](const MoritaFingerprint& m) { return std::optional(m.stable_grothendieck.to_string()); }},
        {"dim_Zst", [](const MoritaFingerprint& m) { return std::optional(std::to_string(m.dim_Zst)); }},
        {"fp_Z_mod_R", [](const MoritaFingerprint& m) { return std::optional(m.fp_Z_mod_R.to_string()); }},
        {"fp_Zst", [](const MoritaFingerprint& m) { return std::optional(m.fp_Zst.to_string()); }},
        {"loewy_Zst", [](const MoritaFingerprint& m) { return std::optional(std::to_string(m.loewy_Zst)); }},
    };
    for (unsigned n = 1; n <= kCompareLevels; ++n)
      s.push_back({"kuelshammer_n" + std::to_string(n), [n](const MoritaFingerprint& m) -> std::optional<std::string> {
                     if (m.kuelshammer_fps.size() < n) return std::nullopt;
                     return m.kuelshammer_fps[n - 1].to_string();
                   }});
    return s;
  }();
  return steps;
}

inline void check_comparable(const CatalogEntry& x, const CatalogEntry& y) {
  if (x.field.characteristic != y.field.characteristic)
    throw CharMismatch("cannot compare " + x.field.to_string() + " with " + y.field.to_string());
  if (x.field.order() != y.field.order())
    throw CharMismatch("fields of different order: " + x.field.to_string() + " and " + y.field.to_string());
}

inline bool same_entry(const CatalogEntry& x, const CatalogEntry& y) {
  return x.family == y.family && x.params == y.params && x.field == y.field;
}

/// Compares already computed fingerprints; the entries supply the open-case lookup.
inline Verdict compare_fingerprints(const CatalogEntry& x, const MoritaFingerprint& fx, const CatalogEntry& y,
                                    const MoritaFingerprint& fy,
                                    const std::vector<OpenCase>& table = default_open_cases()) {
  Verdict v;
  for (const auto& step : invariant_order()) {
    auto a = step.value(fx);
    auto b = step.value(fy);
    if (!a || !b) continue;
    if (*a != *b) {
      v.outcome = Outcome::Distinguished;
      v.invariant = step.name;
      v.value_a = *a;
      v.value_b = *b;
      return v;
    }
  }
  v.outcome = Outcome::NotDistinguished;
  if (const auto* c = find_open_case(x, y, table)) {
    v.known_open = true;
    v.open_case = c->id;
    v.note = c->note;
  } else {
    v.note = "all invariants agree on a pair not listed as open";
  }
  return v;
}

inline Verdict compare(const CatalogEntry& x, const CatalogEntry& y, FingerprintCache* cache = nullptr,
                       const std::vector<OpenCase>& table = default_open_cases()) {
  check_comparable(x, y);
  if (same_entry(x, y)) return Verdict{Outcome::Identical, "", "", "", false, "", "parameters equal"};
  if (cache) return compare_fingerprints(x, *cache->get(x), y, *cache->get(y), table);
  return compare_fingerprints(x, morita_fingerprint(x), y, morita_fingerprint(y), table);
}

struct BlockRow {
  int defect = 0;
  int simples = 0;
  CatalogEntry entry;
  std::shared_ptr<const MoritaFingerprint> fp;
};

struct PairVerdict {
  std::size_t a = 0;
  std::size_t b = 0;
  Verdict verdict;
};

struct BlockTable {
  RepType rep = RepType::dihedral;
  std::vector<BlockRow> rows;
  std::vector<PairVerdict> pairs;  // every unordered pair within one defect
};

inline BlockTable block_table(RepType rep, int defect_lo, int defect_hi, FingerprintCache& cache) {
  if (defect_lo > defect_hi) throw ParameterConstraint("empty defect range");
  BlockTable t;
  t.rep = rep;
  std::vector<CatalogEntry> all;
  for (int n = defect_lo; n <= defect_hi; ++n)
    for (int s = 1; s <= 3; ++s) {
      if (rep == RepType::dihedral && s == 2 && n < 3) continue;
      for (auto& e : tame_block_entries(BlockSpec{rep, n, s})) {
        all.push_back(e);
        t.rows.push_back(BlockRow{n, s, std::move(e), nullptr});
      }
    }
  cache.warm(all);
  for (auto& r : t.rows) r.fp = cache.get(r.entry);
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = i + 1; j < t.rows.size(); ++j) {
      if (t.rows[i].defect != t.rows[j].defect) continue;
      t.pairs.push_back({i, j, compare_fingerprints(t.rows[i].entry, *t.rows[i].fp, t.rows[j].entry, *t.rows[j].fp)});
    }
  return t;
}

/// Legal semidihedral and quaternion entries with parameters up to `bound`,
/// over the given field.
inline std::vector<CatalogEntry> tame_grid(RepType rep, const FieldSpec& field, int bound = 4) {
  std::vector<CatalogEntry> out;
  auto add = [&](const std::string& fam, const Params& p) {
    try {
      out.push_back(make_entry(fam, p, field));
    } catch (const ParameterConstraint&) {
    } catch (const CharConstraint&) {
    }
  };
  const std::string one = rep == RepType::semidihedral ? "SD" : "Q";
  const std::vector<std::string> cs = {"0", "1"};
  for (int k = 2; k <= bound; ++k) add(one + "1A1", {{"k", std::to_string(k)}});
  if (rep == RepType::semidihedral) {
    for (const char* fam : {"SD2B1", "SD2B2"})
      for (int k = 1; k <= bound; ++k)
        for (int t = 2; t <= bound; ++t)
          for (const auto& c : cs) add(fam, {{"k", std::to_string(k)}, {"t", std::to_string(t)}, {"c", c}});
  } else {
    for (int k = 1; k <= bound; ++k)
      for (int s = 3; s <= bound; ++s)
        for (const auto& c : cs)
          add("Q2B1", {{"k", std::to_string(k)}, {"s", std::to_string(s)}, {"a", "1"}, {"c", c}});
  }
  for (int a = 1; a <= bound; ++a)
    for (int b = 1; b <= a; ++b)
      for (int c = 1; c <= b; ++c)
        add(one + "3K", {{"a", std::to_string(a)}, {"b", std::to_string(b)}, {"c", std::to_string(c)}});
  if (rep == RepType::quaternion) {
    if (field.characteristic == 2) {
      if (field.order() > 2) add("Q3A1", {{"d", "g"}});
    } else {
      add("Q3A1", {{"d", field.characteristic == 3 ? "2" : "-1"}});
    }
  }
  return out;
}

struct Section7Result {
  std::vector<std::tuple<CatalogEntry, CatalogEntry, Verdict>> pairs;
  std::size_t failures = 0;
  std::vector<std::string> errors;
};

/// Compares every pair with different simple counts within the semidihedral
/// and within the quaternion grid, for each field given.
inline Section7Result section7_suite(const std::vector<FieldSpec>& fields, FingerprintCache& cache, int bound = 4) {
  Section7Result r;
  std::vector<std::vector<CatalogEntry>> grids;
  std::vector<CatalogEntry> all;
  for (const auto& f : fields)
    for (auto rep : {RepType::semidihedral, RepType::quaternion}) {
      grids.push_back(tame_grid(rep, f, bound));
      all.insert(all.end(), grids.back().begin(), grids.back().end());
    }
  cache.warm(all);
  for (const auto& g : grids)
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (g[i].n_simples == g[j].n_simples) continue;
        try {
          auto v = compare(g[i], g[j], &cache);
          if (v.outcome != Outcome::Distinguished) ++r.failures;
          r.pairs.emplace_back(g[i], g[j], std::move(v));
        } catch (const std::exception& ex) {
          ++r.failures;
          r.errors.push_back(g[i].label() + " vs " + g[j].label() + ": " + ex.what());
        }
      }
  return r;
}

}  // namespace tamesym
