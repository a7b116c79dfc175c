#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tamesym/algebra.hpp"

using namespace tamesym;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

template <class Err>
void expect_error_at(const std::string& text, int line, int column) {
  try {
    parse_presentation(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const Err& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

const char* kLoop = "field char=0\nvertices 1\narrow X 0 0\narrow Y 0 0\n";

}  // namespace

TEST(Parser, ReadsQuiverParamsAndRelations) {
  auto p = parse_presentation(std::string(kLoop) + "param k=3\nrelation X^2\nrelation (X*Y)^k-(Y*X)^k\ntruncate 9\n");
  EXPECT_EQ(p.quiver.vertex_count, 1);
  EXPECT_EQ(p.quiver.arrows.size(), 2u);
  ASSERT_EQ(p.relations.size(), 2u);
  EXPECT_EQ(p.relations[1].terms.size(), 2u);
  EXPECT_EQ(p.params.at("k").integer, 3);
  EXPECT_EQ(p.truncation_hint, 9u);
  EXPECT_FALSE(p.commutative);
}

TEST(Parser, CommutativeAddsOneCommutatorPerLoopPair) {
  auto p = parse_presentation(std::string(kLoop) + "commutative\nrelation X*Y\n");
  EXPECT_EQ(p.effective_relations().size(), 2u);
}

TEST(Parser, CommentsAndBlankLinesIgnored) {
  EXPECT_NO_THROW(parse_presentation("# header\n\nfield char=2   # F_2\nvertices 1\narrow x 0 0\n\nrelation x^3\n"));
}

TEST(Parser, FieldLineWithModulus) {
  auto p = parse_presentation("field char=2 order=8 modulus=x^3+x+1\nvertices 1\narrow x 0 0\nrelation x^2\n");
  EXPECT_EQ(p.field.order(), 8u);
  EXPECT_EQ(p.field.modulus, (std::vector<std::uint32_t>{1, 1, 0, 1}));
}

TEST(ParserErrors, UnknownKeyword) { expect_error_at<ParseError>("field char=0\nvertex 1\n", 2, 1); }

TEST(ParserErrors, UnknownArrowInRelation) {
  expect_error_at<NameError>(std::string(kLoop) + "relation X*Z\n", 5, 12);
}

TEST(ParserErrors, ArrowVertexOutOfRange) {
  expect_error_at<ParseError>("field char=0\nvertices 2\narrow a 0 2\n", 3, 11);
}

TEST(ParserErrors, NonComposablePath) {
  // a: 0 -> 1 followed by a again does not compose.
  try {
    parse_presentation("field char=0\nvertices 2\narrow a 0 1\nrelation a*a\n");
    FAIL();
  } catch (const PathError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_GT(e.column(), 0);
  }
}

TEST(ParserErrors, NonParallelTerms) {
  expect_error_at<PathError>("field char=0\nvertices 2\narrow a 0 1\narrow b 1 0\nrelation a*b-b*a\n", 5, 10);
}

TEST(ParserErrors, NonPrimeCharacteristic) {
  EXPECT_THROW(parse_presentation("field char=4\nvertices 1\narrow x 0 0\n"), InvalidPrime);
}

TEST(ParserErrors, MissingVertices) { expect_error_at<ParseError>("field char=0\n", 1, 1); }

TEST(ParserErrors, GeneratorNeedsExtensionField) {
  // The field can still be overridden after parsing, so g is checked when the
  // algebra is built.
  auto p = parse_presentation("field char=2\nvertices 1\narrow x 0 0\nparam d=g\nrelation x^2-d*x^3\n");
  EXPECT_THROW(build_algebra(p, GaloisField(2)), InvalidField);
  p.field = FieldSpec::extension(2, 2);
  EXPECT_EQ(build_algebra(p, GaloisField(p.field)).dim(), 2u);
}

TEST(Build, TruncatedPolynomialDimension) {
  auto p = parse_presentation("field char=0\nvertices 1\narrow x 0 0\nrelation x^5\n");
  const auto a = build_algebra(p, RationalField{});
  EXPECT_EQ(a.dim(), 5u);
  EXPECT_EQ(a.radical_power_dims(), (std::vector<std::size_t>{5, 4, 3, 2, 1, 0}));
}

TEST(Build, KroneckerQuiverIsFourDimensional) {
  auto p = parse_presentation("field char=3\nvertices 2\narrow a 0 1\narrow b 0 1\n");
  const auto a = build_algebra(p, GaloisField(3));
  EXPECT_EQ(a.dim(), 4u);
  EXPECT_TRUE(a.check_associativity());
  EXPECT_TRUE(a.check_unit());
}

TEST(Build, ShippedPresentationsParseAndBuild) {
  const std::filesystem::path dir = std::filesystem::path(TAMESYM_SOURCE_DIR) / "data" / "presentations";
  const std::map<std::string, std::size_t> dims = {{"a1_m3_n2.dsl", 5},        {"d1a1_k2_char2.dsl", 8},
                                                   {"q3a1_f4.dsl", 20},         {"kronecker_square_zero.dsl", 4},
                                                   {"truncated_poly_f5.dsl", 5}};
  std::size_t seen = 0;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    if (f.path().extension() != ".dsl") continue;
    ++seen;
    auto p = parse_presentation(slurp(f.path()));
    const auto dim = with_field(p.field, [&](const auto& F) { return build_algebra(p, F).dim(); });
    ASSERT_TRUE(dims.count(f.path().filename().string())) << f.path();
    EXPECT_EQ(dim, dims.at(f.path().filename().string())) << f.path();
  }
  EXPECT_EQ(seen, dims.size());
}
