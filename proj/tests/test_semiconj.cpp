#include <gtest/gtest.h>

#include <random>

#include "linedyn/extension.hpp"
#include "linedyn/mpoly_algos.hpp"
#include "linedyn/mpoly_parse.hpp"
#include "linedyn/semiconj.hpp"

using namespace linedyn;

namespace {

Fp draw(const PrimeField& f, std::mt19937_64& rng) { return f.from_uint(rng() % f.p); }

}  // namespace

TEST(PlaneMap, ShapeOfTheQuadrics) {
  const auto& m = plane_map_model(7);
  for (const auto* q : {&m.Q1, &m.Q2, &m.Q3}) {
    EXPECT_TRUE(q->is_homogeneous());
    EXPECT_EQ(q->degree(), 6);
  }
  EXPECT_EQ(m.R.degree(), 15);
  auto z1 = MPoly<Rational>::variable(m.Q.field(), m.Q.nvars(), 0);
  EXPECT_EQ(m.Q1, z1 * m.Q);
  EXPECT_TRUE(gcd(std::vector<MPoly<Rational>>{m.Q1, m.Q2, m.Q3}).is_constant());
}

TEST(PlaneMap, IndeterminacyPointsThrow) {
  RationalField Q;
  for (const auto& p : plane_map_model(7).indeterminacy) {
    if (p.minpoly.empty()) {
      Vec3<Rational> z;
      for (int i = 0; i < 3; ++i) z[i] = p.coords[i].evaluate(std::vector<Rational>{Q.zero()});
      EXPECT_THROW(F_eval(z), IndeterminacyPoint) << p.name;
    } else {
      auto E = adjoin_root(Q, p.minpoly);
      auto c = algebraic_coords<Ext<Rational>>(p, E, E.generator());
      EXPECT_THROW(F_eval(Vec3<Ext<Rational>>{c[0], c[1], c[2]}), IndeterminacyPoint) << p.name;
    }
  }
  EXPECT_NO_THROW(F_eval(Vec3<Rational>{Rational(2), Rational(3), Rational(5)}));
}

TEST(PlaneMap, LineZ1EqualsZeroIsInvariant) {
  PrimeField f(100003);
  std::mt19937_64 rng(79);
  for (int i = 0; i < 20; ++i) {
    Vec3<Fp> z{f.zero(), draw(f, rng), draw(f, rng)};
    EXPECT_TRUE(F_eval(z)[0].is_zero());
  }
}

TEST(Branch, SanityQuadratic) {
  auto vars = std::vector<std::string>{"z1", "z2", "y1"};
  auto d = discriminant_wrt(parse_polynomial("y1^2 - z1*z2", vars), 2);
  auto b = certify_branch(d, parse_polynomial("z1*z2", vars));
  EXPECT_TRUE(b.S.is_constant());
  EXPECT_EQ(b.c * b.S.leading_term().second * b.S.leading_term().second, Rational(4));
  EXPECT_THROW(certify_branch(d, parse_polynomial("z1", vars)), CertificationFailed);
}

TEST(Branch, BothSurfacesCertify) {
  for (int n : {7, 8}) {
    auto b = branch_curve(n);
    EXPECT_EQ(b.D, b.W * b.S * b.S * MPoly<Rational>::constant(b.D.field(), b.D.nvars(), b.c)) << n;
  }
}

TEST(Semiconjugacy, PointwiseMuMatchesF) {
  PrimeField f(100003);
  std::mt19937_64 rng(83);
  int agreed = 0;
  for (int i = 0; i < 200 && agreed < 50; ++i) {
    Vec3<Fp> z{draw(f, rng), draw(f, rng), f.one()};
    try {
      auto mu = mu_pointwise(7, z);
      EXPECT_EQ(mu.image, F_eval(z));
      ++agreed;
    } catch (const NoLift&) {
    }
  }
  EXPECT_EQ(agreed, 50);
}

TEST(Semiconjugacy, CommutingSquareOverF101) {
  PrimeField f(101);
  std::mt19937_64 rng(89);
  int held = 0, tried = 0;
  for (int i = 0; i < 400 && held < 100; ++i) {
    try {
      ++tried;
      auto r = commuting_square_check(random_chart_point(7, f, rng));
      EXPECT_TRUE(r.holds);
      ++held;
    } catch (const Error&) {
    }
  }
  EXPECT_EQ(held, 100) << "after " << tried << " draws";
}

TEST(IterateDegrees, FirstTwo) {
  auto d = iterate_degrees(2);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].degree, 6);
  EXPECT_EQ(d[1].degree, 21);
  auto m = iterate_degrees_mod_p(2, 100003);
  EXPECT_EQ(m[1].degree, 21);
}
