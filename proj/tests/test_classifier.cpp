#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "tamesym/classifier.hpp"

using namespace tamesym;

namespace {

FingerprintCache& cache() {
  static FingerprintCache c;
  return c;
}

Verdict cmp(const std::string& fa, const std::string& pa, const std::string& fb, const std::string& pb,
            const FieldSpec& f) {
  return compare(make_entry(fa, pa, f), make_entry(fb, pb, f), &cache());
}

}  // namespace

TEST(Compare, SpecialBiserialSeparatesD2BScalars) {
  const auto v = cmp("D2B", "k=1,s=1,c=0", "D2B", "k=1,s=1,c=1", FieldSpec::prime(2));
  EXPECT_EQ(v.outcome, Outcome::Distinguished);
  EXPECT_EQ(v.invariant, "special_biserial");
}

TEST(Compare, KuelshammerSeparatesSD2B1AtOneThree) {
  const auto v = cmp("SD2B1", "k=1,t=3,c=0", "SD2B1", "k=1,t=3,c=1", FieldSpec::prime(2));
  EXPECT_EQ(v.outcome, Outcome::Distinguished);
  EXPECT_EQ(v.invariant, "kuelshammer_n1");
}

TEST(Compare, D1A2ScalarPairIsKnownOpen) {
  const auto v = cmp("D1A2", "k=2,d=0", "D1A2", "k=2,d=1", FieldSpec::prime(2));
  EXPECT_EQ(v.outcome, Outcome::NotDistinguished);
  EXPECT_TRUE(v.known_open);
  EXPECT_EQ(v.open_case, "d1a2-scalar");
}

TEST(Compare, StableGrothendieckSeparatesC1) {
  const auto v = cmp("C1", "", "D1A1", "k=2", FieldSpec::rationals());
  EXPECT_EQ(v.outcome, Outcome::Distinguished);
  EXPECT_EQ(v.invariant, "stable_grothendieck");
  EXPECT_EQ(v.value_a, "Z/4");
  EXPECT_EQ(v.value_b, "Z/8");
}

TEST(Compare, IdenticalAndMismatchedFields) {
  const auto e = make_entry("D1A1", "k=2", FieldSpec::prime(3));
  EXPECT_EQ(compare(e, e).outcome, Outcome::Identical);
  EXPECT_THROW(compare(e, make_entry("D1A1", "k=2", FieldSpec::prime(5))), CharMismatch);
  EXPECT_THROW(compare(make_entry("D1A1", "k=2", FieldSpec::prime(2)),
                       make_entry("D1A1", "k=2", FieldSpec::extension(2, 2))),
               CharMismatch);
}

TEST(Compare, PropertySymmetricAndReflexiveOnAGrid) {
  const auto F = FieldSpec::prime(2);
  std::vector<CatalogEntry> es;
  for (const char* p : {"k=2", "k=3"}) es.push_back(make_entry("D1A1", p, F));
  for (const char* p : {"k=2,d=0", "k=2,d=1"}) es.push_back(make_entry("D1A2", p, F));
  for (const char* p : {"k=1,t=2,c=0", "k=1,t=3,c=1", "k=2,t=2,c=0"}) es.push_back(make_entry("SD2B1", p, F));
  for (const char* p : {"k=2,t=2,c=0", "k=2,t=2,c=1"}) es.push_back(make_entry("SD2B2", p, F));
  es.push_back(make_entry("SD3K", "a=2,b=1,c=1", F));
  es.push_back(make_entry("Q3A1", "d=g", FieldSpec::extension(2, 2)));
  cache().warm(es);
  for (const auto& x : es)
    for (const auto& y : es) {
      if (!(x.field == y.field)) continue;
      const auto v = compare(x, y, &cache());
      const auto w = compare(y, x, &cache());
      EXPECT_EQ(v.outcome, w.outcome) << x.label() << " / " << y.label();
      EXPECT_EQ(v.invariant, w.invariant);
      EXPECT_EQ(v.value_a, w.value_b);
      EXPECT_EQ(v.known_open, w.known_open);
      if (same_entry(x, y)) {
        EXPECT_EQ(v.outcome, Outcome::Identical);
      }
      // Distinguished pairs really differ in the named invariant.
      if (v.outcome == Outcome::Distinguished) {
        EXPECT_NE(v.value_a, v.value_b);
      }
    }
}

TEST(Compare, UnlistedTieIsUnexpectedNotOpen) {
  // Two presentations of the same algebra read from text are not catalogued
  // as an open case, so a tie is reported without the open flag.
  const auto e = make_entry("D1A1", "k=2", FieldSpec::prime(3));
  auto x = entry_from_presentation(e.presentation, "copy-a");
  auto y = entry_from_presentation(e.presentation, "copy-b");
  const auto v = compare(x, y);
  EXPECT_EQ(v.outcome, Outcome::NotDistinguished);
  EXPECT_FALSE(v.known_open);
}

TEST(OpenCases, MatchingNeedsEqualListedParameters) {
  const auto F = FieldSpec::prime(2);
  EXPECT_NE(find_open_case(make_entry("SD2B1", "k=2,t=2,c=0", F), make_entry("SD2B1", "k=2,t=2,c=1", F)), nullptr);
  EXPECT_EQ(find_open_case(make_entry("SD2B1", "k=2,t=2,c=0", F), make_entry("SD2B1", "k=2,t=3,c=1", F)), nullptr);
  EXPECT_NE(find_open_case(make_entry("SD2B2", "k=2,t=2,c=0", F), make_entry("SD2B1", "k=2,t=2,c=1", F)), nullptr);
}

TEST(OpenCases, JsonRoundTripAndShippedFileAgree) {
  const auto j = to_json(default_open_cases());
  const auto back = open_cases_from_json(j);
  ASSERT_EQ(back.size(), default_open_cases().size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].id, default_open_cases()[i].id);
    EXPECT_EQ(back[i].same, default_open_cases()[i].same);
  }
  std::ifstream in(std::filesystem::path(TAMESYM_SOURCE_DIR) / "data" / "open_cases.json");
  ASSERT_TRUE(in.good());
  EXPECT_EQ(nlohmann::json::parse(in), j);
}

TEST(OpenCases, UnknownFamilyRejected) {
  auto j = to_json(default_open_cases());
  j["cases"][0]["families"][0] = "XYZ";
  EXPECT_THROW(open_cases_from_json(j), ParameterConstraint);
}

TEST(Cache, ConcurrentWarmMatchesSerialComputation) {
  const auto F = FieldSpec::prime(3);
  std::vector<CatalogEntry> es;
  for (int k = 2; k <= 5; ++k) es.push_back(make_entry("Q1A1", "k=" + std::to_string(k), F));
  FingerprintCache c;
  c.warm(es);
  EXPECT_EQ(c.size(), es.size());
  for (const auto& e : es) {
    const auto serial = morita_fingerprint(e);
    const auto cached = c.get(e);
    EXPECT_EQ(cached->fp_Z, serial.fp_Z);
    EXPECT_EQ(cached->stable_grothendieck, serial.stable_grothendieck);
    EXPECT_EQ(cached->kuelshammer_fps, serial.kuelshammer_fps);
  }
}

TEST(Section7, SmallGridSeparatesAllSimpleCounts) {
  FingerprintCache c;
  const auto r = section7_suite({FieldSpec::prime(3)}, c, 3);
  EXPECT_TRUE(r.errors.empty());
  EXPECT_EQ(r.failures, 0u);
  EXPECT_FALSE(r.pairs.empty());
}
