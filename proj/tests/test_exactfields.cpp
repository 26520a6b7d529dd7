#include <gtest/gtest.h>

#include <random>

#include "linedyn/extension.hpp"
#include "linedyn/jet.hpp"
#include "linedyn/mpoly_parse.hpp"
#include "linedyn/prime_field.hpp"
#include "linedyn/ratfun.hpp"
#include "linedyn/rational.hpp"
#include "linedyn/scalar_traits.hpp"

using namespace linedyn;

TEST(Rational, AddsInLowestTerms) {
  Rational a(2, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(5, 6));
  EXPECT_EQ(Rational(4, -6), Rational(-2, 3));
  EXPECT_EQ(Rational(4, -6).denominator(), 3);
}

TEST(Rational, ParsesFractions) {
  EXPECT_EQ(Rational::parse("-25/8"), Rational(-25, 8));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
}

TEST(Rational, InverseOfZeroThrows) { EXPECT_THROW(Rational(0).inv(), NonInvertible); }

TEST(PrimeField, InverseOfThreeModSeven) {
  PrimeField f(7);
  EXPECT_EQ(f.from_int(3).inv(), f.from_int(5));
  EXPECT_EQ(f.from_int(-1).value(), 6u);
}

TEST(PrimeField, RejectsCompositeModulus) {
  EXPECT_THROW(PrimeField(100381), UnsupportedDegree);
  EXPECT_NO_THROW(PrimeField(100003));
}

TEST(PrimeField, MixedModuliThrow) {
  PrimeField f(7), g(11);
  EXPECT_THROW(f.one() + g.one(), FieldMismatch);
}

TEST(PrimeField, FrobeniusFixesEveryElement) {
  PrimeField f(100003);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Fp a = f.from_uint(rng() % f.p);
    EXPECT_EQ(a.pow(f.p), a);
  }
}

TEST(FieldSqrt, SmallPrime) {
  PrimeField f(7);
  auto r = field_sqrt(f.from_int(2));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * *r, f.from_int(2));
  EXPECT_FALSE(field_sqrt(f.from_int(3)));
  EXPECT_EQ(*field_sqrt(f.zero()), f.zero());
}

TEST(FieldSqrt, ExhaustiveModThirteen) {
  PrimeField f(13);
  std::set<std::uint64_t> squares;
  for (std::uint64_t a = 0; a < 13; ++a) squares.insert((a * a) % 13);
  for (std::uint64_t a = 0; a < 13; ++a) {
    auto r = field_sqrt(f.from_uint(a));
    EXPECT_EQ(r.has_value(), squares.count(a) > 0) << a;
    if (r) EXPECT_EQ(*r * *r, f.from_uint(a));
  }
}

TEST(FieldSqrt, Rationals) {
  EXPECT_EQ(*field_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_FALSE(field_sqrt(Rational(2)));
  EXPECT_FALSE(field_sqrt(Rational(-1)));
}

TEST(Extension, ImaginaryUnit) {
  auto E = adjoin_root(RationalField{}, {Rational(1), Rational(0), Rational(1)});
  auto u = E.generator();
  EXPECT_EQ(u * u, E.from_int(-1));
}

TEST(Extension, CubeRootOfUnity) {
  auto E = adjoin_root(RationalField{}, {Rational(1), Rational(1), Rational(1)});
  auto u = E.generator();
  EXPECT_EQ(u * u * u, E.one());
  EXPECT_NE(u, E.one());
}

TEST(Extension, QuarticMinimalPolynomialVanishes) {
  // X^4 - X^3 + 3X^2 - X + 1
  auto E = adjoin_root(RationalField{}, {Rational(1), Rational(-1), Rational(3), Rational(-1), Rational(1)});
  auto u = E.generator();
  auto v = u * u * u * u - u * u * u + E.from_int(3) * u * u - u + E.one();
  EXPECT_TRUE(v.is_zero());
  EXPECT_EQ(u * u.inv(), E.one());
}

TEST(Extension, ReducibleModulusFailsOnInversion) {
  // X^2 - 1 = (X - 1)(X + 1): u - 1 is a zero divisor.
  auto E = adjoin_root(RationalField{}, {Rational(-1), Rational(0), Rational(1)});
  EXPECT_THROW((E.generator() - E.one()).inv(), NonInvertible);
}

TEST(Extension, OverPrimeField) {
  PrimeField f(100003);
  auto E = adjoin_root(f, {f.from_int(-5), f.zero(), f.one()});
  auto u = E.generator();
  EXPECT_EQ(u * u, E.from_int(5));
  EXPECT_EQ((u + E.one()) * (u + E.one()).inv(), E.one());
}

TEST(RatFun, ReducesToLowestTerms) {
  RatFunField<Rational> K{RationalField{}, "t"};
  UPoly<Rational> t({Rational(0), Rational(1)});
  UPoly<Rational> one = UPoly<Rational>::constant(Rational(1));
  RatFun<Rational> a(K, t * t - one, t - one);
  EXPECT_EQ(a, RatFun<Rational>(K, t + one, one));
  EXPECT_EQ(a.den().degree(), 0);
}

TEST(RatFun, FieldOperations) {
  RatFunField<Rational> K{RationalField{}, "t"};
  UPoly<Rational> t({Rational(0), Rational(1)});
  auto x = RatFun<Rational>(K, t, UPoly<Rational>::constant(Rational(1)));
  auto y = (x + K.one()).inv();
  EXPECT_EQ(y * (x + K.one()), K.one());
  EXPECT_EQ((x / x), K.one());
}

TEST(Jet, EpsilonSquaresToZero) {
  RationalField Q;
  Jet<Rational> a(Rational(1), Rational(1), Rational(0)), b(Rational(1), Rational(-1), Rational(0));
  Jet<Rational> p = a * b;
  EXPECT_EQ(p, Jet<Rational>(Rational(1), Rational(0), Rational(0)));
}

TEST(Jet, InverseNeedsUnitConstantTerm) {
  Jet<Rational> a(Rational(0), Rational(1), Rational(0));
  EXPECT_THROW(a.inv(), NonInvertible);
  Jet<Rational> b(Rational(2), Rational(3), Rational(5));
  EXPECT_EQ(b * b.inv(), Jet<Rational>(Rational(1), Rational(0), Rational(0)));
}

TEST(Jet, ChainRuleMatchesFormalDerivative) {
  // f(g(x + e1)) has e1-part f'(g(x)) g'(x).
  RationalField Q;
  JetRing<Rational> J{Q};
  auto f = parse_polynomial("3*x^4 - x^2 + 7", {"x"});
  auto g = parse_polynomial("x^3 + 2*x - 1", {"x"});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Rational x(static_cast<std::int64_t>(rng() % 200) - 100, 1 + static_cast<std::int64_t>(rng() % 17));
    Jet<Rational> xj(x, Q.one(), Q.zero());
    Jet<Rational> gj = g.evaluate<Jet<Rational>>({xj}, J);
    Jet<Rational> fj = f.evaluate<Jet<Rational>>({gj}, J);
    Rational gx = g.evaluate<Rational>({x}, Q);
    Rational expected = f.derivative(0).evaluate<Rational>({gx}, Q) * g.derivative(0).evaluate<Rational>({x}, Q);
    EXPECT_EQ(fj.d1(), expected);
    EXPECT_TRUE(fj.d2().is_zero());
  }
}

TEST(Embed, RationalIntoPrimeField) {
  PrimeField f(7);
  EXPECT_EQ(embed<Fp>(Rational(1, 2), f), f.from_int(4));
  EXPECT_THROW(embed<Fp>(Rational(1, 7), f), NonInvertible);
}
