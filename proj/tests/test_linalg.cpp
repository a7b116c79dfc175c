#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tamesym/additive.hpp"
#include "tamesym/integer_matrix.hpp"
#include "tamesym/subspace.hpp"

using namespace tamesym;

namespace {

// Laplace expansion along the first row; fine for n <= 5.
mpz_class cofactor_det(const MatrixZ& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  mpz_class d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    MatrixZ minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor.at(i - 1, c++) = m.at(i, k);
    d += (j % 2 ? -1 : 1) * m.at(0, j) * cofactor_det(minor);
  }
  return d;
}

// Rank over F_p by counting the image: p^rank = |{x A}| over all row combinations.
std::size_t rank_by_enumeration(const std::vector<std::vector<long>>& a, long p) {
  const std::size_t R = a.size(), C = a.front().size();
  std::set<std::vector<long>> image;
  std::vector<long> coeff(R, 0);
  while (true) {
    std::vector<long> v(C, 0);
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) v[j] = ((v[j] + coeff[i] * a[i][j]) % p + p) % p;
    image.insert(v);
    std::size_t i = 0;
    while (i < R && ++coeff[i] == p) coeff[i++] = 0;
    if (i == R) break;
  }
  std::size_t r = 0;
  for (std::size_t n = 1; n < image.size(); n *= p) ++r;
  return r;
}

}  // namespace

TEST(Rref, HandExampleOverQ) {
  RationalField Q;
  auto m = Matrix<RationalField>::from_ints(Q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const auto r = rref(m);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.reduced.row(0), (std::vector<mpq_class>{1, 0, 1}));
  EXPECT_EQ(r.reduced.row(1), (std::vector<mpq_class>{0, 1, 1}));
}

TEST(Kernel, HandExampleOverF3) {
  GaloisField F(3);
  // x + y + z = 0 over F_3: kernel of dimension 2.
  auto m = Matrix<GaloisField>::from_ints(F, {{1, 1, 1}});
  const auto k = kernel(m);
  EXPECT_EQ(k.dim(), 2u);
  for (const auto& v : k.vectors()) EXPECT_TRUE(is_zero(v[0] + v[1] + v[2]));
  EXPECT_TRUE(k.contains(std::vector<Gf>{F.one(), F.one(), F.one()}));
}

TEST(Kernel, PropertyRankNullity) {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    GaloisField F(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t R = 1 + rng() % 5, C = 1 + rng() % 6;
      std::vector<std::vector<long>> rows(R, std::vector<long>(C));
      for (auto& r : rows)
        for (auto& x : r) x = static_cast<long>(rng() % p);
      const auto m = Matrix<GaloisField>::from_ints(F, rows);
      const auto k = kernel(m);
      EXPECT_EQ(rank(m) + k.dim(), C);
      for (const auto& v : k.vectors())
        for (auto x : m.apply(v)) EXPECT_TRUE(is_zero(x));
      if (p <= 3 && R <= 4) {
        EXPECT_EQ(rank(m), rank_by_enumeration(rows, p));
        MatrixZ z(R, C);
        for (std::size_t i = 0; i < R; ++i)
          for (std::size_t j = 0; j < C; ++j) z.at(i, j) = rows[i][j];
        EXPECT_EQ(rank_mod_p(z, p), rank_by_enumeration(rows, p));
      }
    }
  }
}

TEST(Subspace, IntersectionAndSumDimensions) {
  GaloisField F(5);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto random_space = [&](std::size_t k) {
      std::vector<std::vector<Gf>> vs(k, std::vector<Gf>(6, F.zero()));
      for (auto& v : vs)
        for (auto& x : v) x = F.from_int(static_cast<long>(rng() % 5));
      return Subspace<GaloisField>::span(F, 6, vs);
    };
    const auto a = random_space(1 + rng() % 4), b = random_space(1 + rng() % 4);
    EXPECT_EQ(sum(a, b).dim() + intersect(a, b).dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(intersect(a, b)));
    EXPECT_TRUE(sum(a, b).contains(b));
  }
}

TEST(Inverse, TimesOriginalIsIdentity) {
  RationalField Q;
  auto m = Matrix<RationalField>::from_ints(Q, {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  EXPECT_EQ(m * inverse(m), Matrix<RationalField>::identity(Q, 3));
}

TEST(Smith, HandExamples) {
  // diag(2, 6) hidden by unimodular changes.
  const auto s = smith_normal_form(MatrixZ{{2, 4}, {6, 18}});
  EXPECT_EQ(s.divisors, (std::vector<mpz_class>{2, 6}));
  const auto c = smith_normal_form(MatrixZ{{4, 2}, {2, 4}});
  EXPECT_EQ(c.divisors, (std::vector<mpz_class>{2, 6}));
  const auto sing = smith_normal_form(MatrixZ{{1, 2}, {2, 4}});
  EXPECT_EQ(sing.rank, 1u);
  EXPECT_EQ(sing.cokernel_free_rank, 1u);
}

TEST(Smith, DihedralTwoSimpleCartan) {
  // C = [[4k, 2k], [2k, k+s]] for k = 2, s = 1: determinant 4ks = 8.
  const auto s = smith_normal_form(MatrixZ{{8, 4}, {4, 3}});
  mpz_class prod = 1;
  for (const auto& d : s.divisors) prod *= d;
  EXPECT_EQ(prod, 8);
}

TEST(Bareiss, MatchesCofactorExpansion) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> v(-7, 7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    MatrixZ m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v(rng);
    if (trial % 7 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) m.at(n - 1, j) = m.at(0, j);
    EXPECT_EQ(bareiss_determinant(m), cofactor_det(m)) << m.to_string();
  }
}

TEST(Smith, PropertyDivisibilityAndDeterminant) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> v(-12, 12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    MatrixZ m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v(rng);
    const auto s = smith_normal_form(m);
    mpz_class prod = 1;
    for (std::size_t i = 0; i < s.divisors.size(); ++i) {
      EXPECT_GT(s.divisors[i], 0);
      prod *= s.divisors[i];
      if (i + 1 < s.divisors.size()) {
        EXPECT_EQ(s.divisors[i + 1] % s.divisors[i], 0);
      }
    }
    EXPECT_EQ(s.rank, rank_over_q(m));
    if (s.rank == n) {
      EXPECT_EQ(prod, abs(cofactor_det(m)));
    }
  }
}

TEST(GaloisField, FieldAxiomsOnF9) {
  const GaloisField F(FieldSpec::extension(3, 2));
  ASSERT_EQ(F.order(), 9u);
  std::vector<Gf> all;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) all.push_back(F.from_digits({a, b}));
  for (auto x : all) {
    if (!is_zero(x)) {
      EXPECT_EQ(x * F.inv(x), F.one());
    }
    for (auto y : all) {
      EXPECT_EQ(x * y, y * x);
      for (auto z : all) EXPECT_EQ(x * (y + z), x * y + x * z);
    }
  }
  // The generator has multiplicative order 8 when the modulus is primitive,
  // and in any case order dividing 8.
  Gf g = F.generator(), pw = F.one();
  for (int i = 0; i < 8; ++i) pw *= g;
  EXPECT_EQ(pw, F.one());
}

TEST(AdditiveKernel, SquaringOnF4IsBijective) {
  const GaloisField big(FieldSpec::extension(2, 2));
  const GaloisField prime(2);
  // x -> x^2 on F_4 viewed as F_2^2: injective, so the kernel is zero.
  const auto gens = prime_field_basis(big, 1);
  Matrix<GaloisField> images(prime, 0, 2);
  for (const auto& x : gens) images.append_row(restrict_scalars(big, prime, {x[0] * x[0]}));
  EXPECT_EQ(kernel_additive_map(images).dim(), 0u);
}
