#include <gtest/gtest.h>

#include <random>

#include "linedyn/arrangements.hpp"
#include "linedyn/families.hpp"
#include "linedyn/matroids.hpp"
#include "linedyn/prime_field.hpp"

using namespace linedyn;

TEST(Permutation, CyclesAndComposition) {
  auto s = Permutation::parse_cycles(7, "(1,7,4,3,6,5,2)");
  EXPECT_EQ(s(1), 7);
  EXPECT_EQ(s(2), 1);
  EXPECT_EQ(s.order(), 7);
  EXPECT_TRUE((s * s.inverse()).is_identity());
  EXPECT_EQ(Permutation::parse_cycles(7, s.cycle_string()), s);
  auto a = Permutation::from_cycles(3, {{1, 2}}), b = Permutation::from_cycles(3, {{2, 3}});
  EXPECT_EQ((a * b)(1), 2);
  EXPECT_EQ((a * b)(2), 3);
  EXPECT_EQ((a * b)(3), 1);
}

TEST(Permutation, RejectsNonBijections) { EXPECT_THROW(Permutation({1, 1, 2}), Error); }

TEST(Matroid, ThreeConcurrentLinesGiveOneNonBasis) {
  std::vector<ProjLine2<Rational>> l;
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}})
    l.emplace_back(Vec3<Rational>{Rational(a), Rational(b), Rational(c)});
  auto m = matroid_from_arrangement(LabeledArrangement<Rational>(l));
  ASSERT_EQ(m.nonbasis_count(), 1u);
  EXPECT_EQ(m.nonbases().front(), (Rank3Matroid::Triple{1, 2, 3}));
}

TEST(Matroid, M7Definition) {
  auto h = matroid_M7_heptagon();
  EXPECT_EQ(h.ground(), 14);
  EXPECT_EQ(h.nonbasis_count(), 21u);
  EXPECT_TRUE(h.is_nonbasis(1, 3, 2 + 7));
  EXPECT_TRUE(h.is_basis(1, 2, 3));
  EXPECT_TRUE(h.is_basis(1, 2, 3 + 7));
  // Every non-basis is {a, b, c'} with a + b = 2c mod 7.
  for (const auto& t : h.nonbases()) {
    ASSERT_LE(t[1], 7);
    ASSERT_GT(t[2], 7);
    EXPECT_EQ((t[0] + t[1]) % 7, (2 * (t[2] - 7)) % 7);
  }
  EXPECT_EQ(matroid_M7().nonbasis_count(), 21u);
}

TEST(Matroid, FamilyIndexingIsARelabelingOfTheHeptagon) {
  const auto& pos = heptagon_position();
  std::vector<int> img(14);
  for (int i = 1; i <= 7; ++i) {
    img[i - 1] = pos[i];
    img[i + 6] = pos[i] + 7;
  }
  EXPECT_EQ(matroid_M7_heptagon().relabeled(Permutation(img)), matroid_M7());
}

TEST(Matroid, M8Definition) {
  auto m = matroid_M8();
  EXPECT_EQ(m.ground(), 16);
  EXPECT_EQ(m.nonbasis_count(), 28u);
  EXPECT_TRUE(m.is_nonbasis(1, 8, 1 + 8));
  EXPECT_TRUE(m.is_basis(9, 10, 11));
  int k = 0;
  for (const auto& part : octagon_partition()) {
    ++k;
    for (auto [i, j] : part) EXPECT_TRUE(m.is_nonbasis(i, j, k + 8));
  }
}

TEST(Matroid, IdentityIsAnAutomorphism) {
  EXPECT_TRUE(is_automorphism(matroid_M7(), Permutation::identity(14)));
  EXPECT_TRUE(is_automorphism(matroid_M8(), Permutation::identity(16)));
  EXPECT_FALSE(is_automorphism(matroid_M8(), Permutation::from_cycles(16, {{1, 9}})));
}

TEST(Matroid, SigmaGeneratorsAndClosure) {
  auto m = matroid_M7();
  EXPECT_TRUE(is_automorphism(m, sigma1()));
  EXPECT_TRUE(is_automorphism(m, sigma2()));
  auto g = group_closure({sigma1(), sigma2()});
  EXPECT_EQ(g.order(), 42u);
  for (const auto& a : g.elements) {
    EXPECT_TRUE(g.contains(a.inverse()));
    EXPECT_TRUE(g.contains(a * sigma1()));
    EXPECT_TRUE(is_automorphism(m, a));
  }
  EXPECT_TRUE(g.contains(sigma1()));
  EXPECT_TRUE(g.contains(sigma2()));
}

TEST(Matroid, M8InvolutionsGenerateOrder32) {
  auto m = matroid_M8();
  std::vector<Permutation> gens;
  for (const auto& s : m8_involutions()) {
    EXPECT_TRUE(is_automorphism(m, s));
    EXPECT_EQ(s.order(), 2);
    gens.push_back(s);
  }
  auto g = group_closure(gens);
  EXPECT_EQ(g.order(), 32u);
  EXPECT_TRUE(g.contains(m8_commuting_involution()));
}

TEST(Matroid, ProjectiveInvariance) {
  PrimeField f(100003);
  std::mt19937_64 rng(41);
  for (int n : {7, 8}) {
    for (int i = 0; i < 20; ++i) {
      auto x = random_realizable_point(n, f, rng, 50);
      auto a = checked_realization(n, x).all();
      EXPECT_EQ(matroid_from_arrangement(a), n == 7 ? matroid_M7() : matroid_M8());
      Mat3<Fp> g;
      do {
        for (auto& row : g.m)
          for (auto& v : row) v = f.from_uint(rng() % f.p);
      } while (g.det().is_zero());
      EXPECT_EQ(matroid_from_arrangement(apply(ProjMap2<Fp>(g), a)), matroid_from_arrangement(a));
    }
  }
}
