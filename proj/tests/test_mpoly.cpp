#include <gtest/gtest.h>

#include "linedyn/mpoly_algos.hpp"
#include "linedyn/mpoly_parse.hpp"
#include "linedyn/prime_field.hpp"
#include "linedyn/upoly.hpp"

using namespace linedyn;

namespace {

const std::vector<std::string> kVars{"z1", "z2", "z3", "y1"};

MPoly<Rational> P(const char* s) { return parse_polynomial(s, kVars); }

UPoly<Rational> U(std::initializer_list<std::int64_t> c) {
  std::vector<Rational> v;
  for (auto x : c) v.emplace_back(x);
  return UPoly<Rational>(std::move(v));
}

}  // namespace

TEST(MPoly, ExpandsProducts) {
  EXPECT_EQ(P("(z1 + z2)^2"), P("z1^2 + 2*z1*z2 + z2^2"));
  EXPECT_EQ(P("(z1 - z2)*(z1 + z2)"), P("z1^2 - z2^2"));
  EXPECT_EQ(P("(z1 + 1)^3 - z1^3"), P("3*z1^2 + 3*z1 + 1"));
  EXPECT_EQ(P("z1/2 + z1/2"), P("z1"));
}

TEST(MPoly, ParserRejectsBadInput) {
  EXPECT_THROW(P("z1 +"), ParseError);
  EXPECT_THROW(P("w^2"), ParseError);
  EXPECT_THROW(P("z1/z2"), ParseError);
}

TEST(MPoly, Degrees) {
  auto f = P("z1^3*z2 + z3^2 - 7");
  EXPECT_EQ(f.degree(), 4);
  EXPECT_EQ(f.degree_in(0), 3);
  EXPECT_EQ(f.degree_in(3), 0);
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_TRUE(P("z1^2 - z2*z3").is_homogeneous());
}

TEST(MPoly, EvaluateAndSubstitute) {
  auto f = P("z1^2*z2 - 3*z3 + 1");
  EXPECT_EQ(f.evaluate({Rational(2), Rational(5), Rational(1, 3), Rational(0)}), Rational(20));
  auto g = f.substitute({P("z2 + z3"), P("z2"), P("z3"), P("y1")});
  EXPECT_EQ(g, P("(z2 + z3)^2*z2 - 3*z3 + 1"));
  EXPECT_EQ(f.evaluate_var(0, Rational(1)), P("z2 - 3*z3 + 1"));
}

TEST(MPoly, ExactDivision) {
  auto q = exact_divide(P("z1^2 - z2^2"), P("z1 - z2"));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P("z1 + z2"));
  EXPECT_FALSE(exact_divide(P("z1^2 + z2^2"), P("z1 - z2")));
  EXPECT_THROW(exact_divide(P("z1"), P("0")), NonInvertible);
}

TEST(MPoly, GcdOfMonomials) {
  EXPECT_EQ(gcd(P("z1*z2"), P("z1*z3")), P("z1"));
  EXPECT_EQ(gcd(P("z1*z2"), P("z3")), P("1"));
}

TEST(MPoly, GcdOfCommonFactor) {
  auto g = P("z1^2 + z2*z3 - 1");
  auto a = g * P("z1 - 2*z3"), b = g * P("z2^2 + z3");
  auto h = gcd(a, b);
  EXPECT_EQ(h, g.monic());
}

TEST(MPoly, GcdOverPrimeField) {
  PrimeField f(100003);
  auto g = P("z1^3 - z2*z3 + 5").map_to<Fp>(f);
  auto a = g * P("z1 + z2 + z3").map_to<Fp>(f), b = g * P("z1 - z2^2").map_to<Fp>(f);
  EXPECT_EQ(gcd(a, b), g.monic());
}

TEST(MPoly, DiscriminantOfQuadratic) {
  // y1^2 - z1 z2 has discriminant 4 z1 z2 in y1.
  EXPECT_EQ(discriminant_wrt(P("y1^2 - z1*z2"), 3), P("4*z1*z2"));
  EXPECT_THROW(discriminant_wrt(P("y1^3"), 3), UnsupportedDegree);
}

TEST(MPoly, SquareRoot) {
  auto s = poly_sqrt(P("z1^2 + 2*z1*z2 + z2^2"));
  ASSERT_TRUE(s);
  EXPECT_TRUE(*s == P("z1 + z2") || *s == P("-z1 - z2"));
  EXPECT_FALSE(poly_sqrt(P("z1^2 + z2^2")));
  EXPECT_FALSE(poly_sqrt(P("2*z1^2")));
}

TEST(MPoly, EulerRelationForHomogeneousForms) {
  auto f = P("z1^4 - 3*z1^2*z2*z3 + 7*z3^4 - z2^3*z1");
  ASSERT_TRUE(f.is_homogeneous());
  MPoly<Rational> euler(f.field(), f.nvars());
  for (int v = 0; v < 3; ++v) euler += MPoly<Rational>::variable(f.field(), 4, v) * f.derivative(v);
  EXPECT_EQ(euler, f.scaled(Rational(4)));
}

TEST(UPoly, RootMultiplicity) {
  // t^7 (t + 1)
  UPoly<Rational> f = UPoly<Rational>::monomial(Rational(1), 7) * U({1, 1});
  EXPECT_EQ(root_multiplicity(f, Rational(0)), 7);
  EXPECT_EQ(root_multiplicity(f, Rational(-1)), 1);
  EXPECT_EQ(root_multiplicity(f, Rational(1)), 0);
}

TEST(UPoly, GcdAndDivision) {
  EXPECT_EQ(gcd(U({-1, 0, 1}), U({-1, 1})).monic(), U({-1, 1}));
  auto [q, r] = divmod(U({1, 0, 0, 1}), U({1, 1}));
  EXPECT_EQ(q, U({1, -1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(factor_multiplicity(U({1, 2, 1}).pow(3), U({1, 1})), 6);
}

TEST(UPoly, ConversionFromMPoly) {
  auto f = P("y1^3 - 2*y1 + 5");
  auto u = f.to_upoly(3);
  EXPECT_EQ(u, U({5, -2, 0, 1}));
  EXPECT_EQ(MPoly<Rational>::from_upoly(f.field(), 4, 3, u), f);
}
