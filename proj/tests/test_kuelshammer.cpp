#include <gtest/gtest.h>

#include "tamesym/classifier.hpp"

using namespace tamesym;

namespace {

// [A,A] spanned by every basis commutator, independent of commutator_space.
Subspace<GaloisField> brute_commutators(const Algebra<GaloisField>& a) {
  EchelonBuilder<GaloisField> b(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      auto x = a.multiply(a.unit_vector(i), a.unit_vector(j));
      const auto y = a.multiply(a.unit_vector(j), a.unit_vector(i));
      for (std::size_t k = 0; k < x.size(); ++k) x[k] -= y[k];
      b.insert(x);
    }
  return b.build();
}

struct Case {
  std::string family, params;
};

// Over F_2 every element is a 0/1 vector; count and compare T_1 membership.
void check_t1_by_enumeration(const Case& c) {
  const auto e = make_entry(c.family, c.params, FieldSpec::prime(2), MakeOptions{false});
  const GaloisField f(2);
  const auto a = build_algebra(e.presentation, f);
  ASSERT_LE(a.dim(), 18u) << e.label();
  const auto C = brute_commutators(a);
  EXPECT_EQ(C, commutator_space(a)) << e.label();
  const auto T = t_space(a, 1, C);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (1ull << a.dim()); ++mask) {
    auto x = a.zero();
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (mask >> i & 1) x[i] = f.one();
    const bool in = C.contains(a.multiply(x, x));
    count += in;
    ASSERT_EQ(in, T.contains(x)) << e.label() << " mask " << mask;
  }
  EXPECT_EQ(count, 1ull << T.dim()) << e.label();
}

}  // namespace

TEST(T1, EnumerationOverF2) {
  for (const auto& c : std::vector<Case>{{"C1", ""},
                                         {"B1", ""},
                                         {"D1A1", "k=2"},
                                         {"D1A2", "k=2,d=1"},
                                         {"SD1A1", "k=2"},
                                         {"SD2B1", "k=1,t=2,c=0"},
                                         {"SD2B1", "k=1,t=3,c=1"},
                                         {"SD2B2", "k=1,t=4,c=0"},
                                         {"SD2B2", "k=1,t=4,c=1"},
                                         {"Q2B1", "k=1,s=3,a=1,c=0"},
                                         {"Q2B1", "k=1,s=3,a=1,c=1"},
                                         {"SD3K", "a=2,b=1,c=1"}})
    check_t1_by_enumeration(c);
}

TEST(T1, EnumerationOverF4) {
  // F_4 has four elements; enumerate K-vectors of a small algebra.
  const GaloisField f(FieldSpec::extension(2, 2));
  const auto e = make_entry("D1A1", "k=2", f.spec());
  const auto a = build_algebra(e.presentation, f);
  ASSERT_EQ(a.dim(), 8u);
  const auto C = commutator_space(a);
  const auto T = t_space(a, 1, C);
  std::uint64_t count = 0;
  const Gf vals[4] = {f.zero(), f.one(), f.generator(), f.generator() + f.one()};
  for (std::uint64_t code = 0; code < (1ull << (2 * a.dim())); ++code) {
    auto x = a.zero();
    for (std::size_t i = 0; i < a.dim(); ++i) x[i] = vals[(code >> (2 * i)) & 3];
    const bool in = C.contains(a.multiply(x, x));
    count += in;
    ASSERT_EQ(in, T.contains(x));
  }
  EXPECT_EQ(count, 1ull << (2 * T.dim()));
}

TEST(Kuelshammer, PerpOfCommutatorsIsCentre) {
  const GaloisField f(3);
  for (const char* fam : {"D1A1", "SD1A1", "Q1A1"}) {
    const auto e = make_entry(fam, "k=3", f.spec());
    const auto a = build_algebra(e.presentation, f);
    const auto C = commutator_space(a);
    const auto lambda = symmetrizing_form(a, C);
    EXPECT_EQ(perp(C, lambda, a), centre(a).subspace) << fam;
  }
}

TEST(Kuelshammer, ChainDescendsToReynolds) {
  const GaloisField f(2);
  for (auto [fam, params] : std::vector<std::pair<std::string, std::string>>{
           {"D2B", "k=2,s=1,c=1"}, {"SD2B1", "k=3,t=3,c=0"}, {"Q3K", "a=2,b=2,c=2"}, {"D3K", "a=2,b=2,c=1"}}) {
    const auto e = make_entry(fam, params, f.spec());
    const auto a = build_algebra(e.presentation, f);
    const auto C = commutator_space(a);
    const auto lambda = symmetrizing_form(a, C);
    const auto Z = centre(a);
    const auto R = reynolds_ideal(a);
    std::optional<Subspace<GaloisField>> prev;
    for (unsigned n = 1; n <= 5; ++n) {
      const auto d = kuelshammer_quotient(a, n, Z, C, lambda);
      if (prev) {
        EXPECT_TRUE(prev->contains(d.t_perp)) << fam << " n=" << n;
      }
      EXPECT_TRUE(d.t_perp.contains(R)) << fam << " n=" << n;
      EXPECT_EQ(d.quotient_fp.dim, Z.subspace.dim() - d.t_perp.dim());
      prev = d.t_perp;
    }
    EXPECT_EQ(*prev, R) << fam;
  }
}

TEST(Kuelshammer, RejectsCharacteristicZeroAndHighLevels) {
  const auto e = make_entry("C1", Params{}, FieldSpec::rationals());
  const auto a = build_algebra(e.presentation, RationalField{});
  EXPECT_THROW(t_space(a, 1, commutator_space(a)), CharZero);
  const GaloisField f(2);
  const auto b = build_algebra(make_entry("C1", Params{}, f.spec()).presentation, f);
  EXPECT_THROW(t_space(b, kMaxKuelshammerLevel + 1, commutator_space(b)), ParameterConstraint);
}
