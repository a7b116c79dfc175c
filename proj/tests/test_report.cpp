#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tamesym/report.hpp"

using namespace tamesym;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::filesystem::path(TAMESYM_SOURCE_DIR) / "tests" / "golden" / name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Golden, DihedralOneSimpleTables) {
  FingerprintCache c;
  for (auto [spec, file] : std::vector<std::pair<FieldSpec, std::string>>{
           {FieldSpec::rationals(), "dihedral1_char0.md"},
           {FieldSpec::prime(2), "dihedral1_char2.md"},
           {FieldSpec::prime(3), "dihedral1_char3.md"}})
    EXPECT_EQ(to_markdown(dihedral_one_simple_table(spec, c)), golden(file)) << file;
}

TEST(Golden, DihedralBlocks) {
  FingerprintCache c;
  const auto b = block_table(RepType::dihedral, 3, 4, c);
  EXPECT_EQ(to_markdown(block_rows_table(b)) + "\n" + to_markdown(block_pairs_table(b)), golden("blocks_dihedral_3_4.md"));
}

TEST(Golden, CharZeroRowsMatchTheStatedTable) {
  // Char 0: A_1(m,n) has dim Z = n+m, Z^pr = 1, Z^st = n+m-1, C = [n+m],
  // G0st = Z/(n+m); C_1 has 4, 1, 3, [4], Z/4; D(1A)_1^k has k+3, 1, k+2,
  // [4k], Z/4k.
  FingerprintCache c;
  const auto t = dihedral_one_simple_table(FieldSpec::rationals(), c);
  const std::vector<std::vector<std::string>> want = {
      {"A1(m=3,n=2)", "5", "5", "1", "4", "[5]", "Z/5"},   {"A1(m=4,n=2)", "6", "6", "1", "5", "[6]", "Z/6"},
      {"A1(m=3,n=3)", "6", "6", "1", "5", "[6]", "Z/6"},   {"C1", "4", "4", "1", "3", "[4]", "Z/4"},
      {"D1A1(k=2)", "8", "5", "1", "4", "[8]", "Z/8"},     {"D1A1(k=3)", "12", "6", "1", "5", "[12]", "Z/12"}};
  EXPECT_EQ(t.rows, want);
}

TEST(Json, FingerprintRoundTrip) {
  Fingerprint f;
  f.dim = 5;
  f.loewy_dims = {5, 3, 1, 0};
  f.socle_series_dims = {2, 4, 5};
  f.min_generators = 2;
  f.characteristic = 2;
  f.extension_degree = 2;
  f.frobenius_kernel_dims = {2, 3, 3};
  f.frobenius_image_dims = {3, 2, 2};
  EXPECT_EQ(fingerprint_from_json(to_json(f)), f);
  EXPECT_EQ(fingerprint_from_json(json::parse(to_json(f).dump())), f);
}

TEST(Json, InvariantsReportIsDeterministic) {
  const auto e = make_entry("D1A1", "k=2", FieldSpec::prime(2));
  const auto a = invariants_report(e, morita_fingerprint(e)).dump();
  const auto b = invariants_report(e, morita_fingerprint(e)).dump();
  EXPECT_EQ(a, b);
  const auto j = json::parse(a);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["invariants"]["dim_Z"], 5);
  EXPECT_EQ(j["invariants"]["dim_Zpr"], 0);
  EXPECT_EQ(j["invariants"]["G0st"], json::array({8}));
}

TEST(Csv, QuotesCellsWithSeparators) {
  Table t{"", {"a", "b"}, {{"x,y", "say \"hi\""}}};
  EXPECT_EQ(to_csv(t), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
}

TEST(Markdown, Layout) {
  Table t{"T", {"a", "b"}, {{"1", "2"}}};
  EXPECT_EQ(to_markdown(t), "### T\n\n| a | b |\n|---|---|\n| 1 | 2 |\n");
}
