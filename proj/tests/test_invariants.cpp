#include <gtest/gtest.h>

#include "tamesym/acceptance.hpp"

using namespace tamesym;

namespace {

// {z : z b = b z for every basis element b}, from the product table alone.
template <ExactField F>
Subspace<F> brute_centre(const Algebra<F>& a) {
  Matrix<F> m(a.field(), 0, a.dim());
  for (std::size_t b = 0; b < a.dim(); ++b)
    for (std::size_t out = 0; out < a.dim(); ++out) {
      auto row = a.zero();
      for (std::size_t z = 0; z < a.dim(); ++z) {
        for (const auto& [j, c] : a.product(z, b))
          if (j == out) row[z] += c;
        for (const auto& [j, c] : a.product(b, z))
          if (j == out) row[z] -= c;
      }
      m.append_row(row);
    }
  return kernel(m);
}

template <ExactField F>
Algebra<F> built(const std::string& fam, const std::string& params, const F& f) {
  return build_algebra(make_entry(fam, params, f.spec()).presentation, f);
}

}  // namespace

TEST(Centre, MatchesBruteForceCommutant) {
  const GaloisField f3(3);
  for (auto [fam, params] : std::vector<std::pair<std::string, std::string>>{
           {"D1A1", "k=3"}, {"SD1A1", "k=2"}, {"D2B", "k=2,s=1,c=0"}, {"SD3K", "a=2,b=2,c=1"}, {"Q3A1", "d=2"}}) {
    const auto a = built(fam, params, f3);
    EXPECT_EQ(centre(a).subspace, brute_centre(a)) << fam;
  }
}

TEST(Centre, DimensionsAgainstStatedValues) {
  // dim Z: k+3 for one-simple algebras of dihedral, semidihedral and
  // quaternion type; k+s+2 for the two-simple ones; 6 for Q3A1.
  const RationalField Q;
  for (long k = 2; k <= 4; ++k) {
    const auto ks = "k=" + std::to_string(k);
    for (const char* fam : {"D1A1", "SD1A1", "Q1A1"})
      EXPECT_EQ(centre(built(fam, ks, Q)).subspace.dim(), static_cast<std::size_t>(k + 3)) << fam << ks;
  }
  for (long k = 1; k <= 3; ++k)
    for (long s = 3; s <= 4; ++s) {
      const auto p = "k=" + std::to_string(k) + ",s=" + std::to_string(s) + ",a=1,c=0";
      EXPECT_EQ(centre(built("Q2B1", p, Q)).subspace.dim(), static_cast<std::size_t>(k + s + 2)) << p;
    }
  EXPECT_EQ(centre(built("Q3A1", "d=2", Q)).subspace.dim(), 6u);
}

TEST(Higman, InsideSocleAndCentreWithCartanRankDimension) {
  for (const auto& spec : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
    with_field(spec, [&](const auto& f) {
      for (auto [fam, params] : std::vector<std::pair<std::string, std::string>>{
               {"A1", "m=3,n=3"}, {"D1A1", "k=3"}, {"D2B", "k=3,s=2,c=0"}, {"SD3K", "a=3,b=2,c=1"}}) {
        const auto a = built(fam, params, f);
        const auto C = commutator_space(a);
        const auto lambda = symmetrizing_form(a, C);
        const auto Z = centre(a).subspace;
        const auto soc = a.socle();
        const auto H = higman_ideal(a, lambda, Z, soc);
        EXPECT_TRUE(soc.contains(H));
        EXPECT_TRUE(Z.contains(H));
        EXPECT_EQ(H.dim(), rank_in_characteristic(a.cartan_matrix(), spec.characteristic))
            << fam << " " << spec.to_string();
      }
      return 0;
    });
  }
}

TEST(Higman, CommutativeLocalGroupAlgebraInItsCharacteristic) {
  // F_2[C_2 x C_2] = K[x,y]/(x^2,y^2): the trace map is multiplication by
  // |G| = 0, so the Higman ideal vanishes; the Reynolds ideal is the socle.
  const GaloisField f(2);
  const auto a = built("C1", "", f);
  const auto C = commutator_space(a);
  EXPECT_EQ(C.dim(), 0u);
  EXPECT_EQ(higman_ideal(a, symmetrizing_form(a, C), centre(a).subspace, a.socle()).dim(), 0u);
  EXPECT_EQ(reynolds_ideal(a).dim(), 1u);
}

TEST(Fingerprint, TruncatedPolynomialByHand) {
  const RationalField Q;
  const auto z = build_chain_model(truncated_monomials({4}), Q);
  const auto fp = fingerprint(z);
  EXPECT_EQ(fp.dim, 4u);
  EXPECT_EQ(fp.loewy_dims, (std::vector<std::size_t>{4, 3, 2, 1, 0}));
  // ann(rad^i) for the nonzero powers rad, rad^2, rad^3.
  EXPECT_EQ(fp.socle_series_dims, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(fp.min_generators, 1u);
}

TEST(Fingerprint, FrobeniusOnTruncatedPolynomialInCharTwo) {
  // K[x]/(x^4), char 2: 1 -> 1, x -> x^2, x^2 -> 0, x^3 -> 0.
  const GaloisField f(2);
  const auto fp = fingerprint(build_chain_model(truncated_monomials({4}), f));
  ASSERT_FALSE(fp.frobenius_image_dims.empty());
  EXPECT_EQ(fp.frobenius_image_dims[0], 2u);
  EXPECT_EQ(fp.frobenius_kernel_dims[0], 2u);
}

TEST(Fingerprint, CatalogA1AgreesWithChainModel) {
  // K[X,Y]/(XY, X^m - Y^n) is the chain model with both tops equal to one
  // socle element.
  for (const auto& spec : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(5)})
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 3}, {5, 3}}) {
      const auto e = make_entry("A1", "m=" + std::to_string(m) + ",n=" + std::to_string(n), spec);
      const auto model = ChainModel{{m, n}, {{1}, {1}}, 1};
      const auto fp = with_field(spec, [&](const auto& f) { return fingerprint(as_comm(build_algebra(e.presentation, f))); });
      EXPECT_EQ(fp, chain_model_fingerprint(model, spec)) << e.label() << " " << spec.to_string();
    }
}

TEST(Fingerprint, IsomorphicPresentationsAgree) {
  // Swapping generator names or rescaling a generator gives an isomorphic
  // algebra, so the fingerprints agree.
  const auto a = parse_presentation("field char=3\nvertices 1\narrow x 0 0\narrow y 0 0\ncommutative\nrelation x*y\nrelation x^3-y^2\n");
  const auto b = parse_presentation("field char=3\nvertices 1\narrow y 0 0\narrow x 0 0\ncommutative\nrelation y*x\nrelation 2*y^3-x^2\n");
  const GaloisField f(3);
  EXPECT_EQ(fingerprint(as_comm(build_algebra(a, f))), fingerprint(as_comm(build_algebra(b, f))));
}

TEST(QuotientComm, ByReynoldsIdealDropsItsDimension) {
  const GaloisField f(2);
  const auto a = built("D3K", "a=2,b=2,c=1", f);
  const auto Z = centre(a);
  const auto R = reynolds_ideal(a);
  const auto q = quotient_comm(Z.algebra, in_coordinates(Z.subspace, R));
  EXPECT_EQ(q.dim(), Z.subspace.dim() - R.dim());
  EXPECT_EQ(fingerprint(q), chain_model_fingerprint(truncated_monomials({2, 2, 1}), f.spec()));
}

TEST(StableGrothendieck, CokernelOfCartan) {
  EXPECT_EQ(stable_grothendieck(MatrixZ{{4}}).to_string(), "Z/4");
  EXPECT_EQ(stable_grothendieck(MatrixZ{{8, 4}, {4, 3}}).to_string(), "Z/8");
  EXPECT_EQ(stable_grothendieck(MatrixZ{{2, 2}, {2, 2}}).to_string(), "Z/2 + Z");
}
