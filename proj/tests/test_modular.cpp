#include <gtest/gtest.h>

#include "linedyn/constants.hpp"
#include "linedyn/modular.hpp"
#include "linedyn/mpoly_parse.hpp"

using namespace linedyn;

namespace {

struct ModularTest : ::testing::Test {
  QtField K = qt_field();
  Qt q(const std::string& s) const { return parse_qt(s, K); }
};

}  // namespace

TEST_F(ModularTest, JInvariantOfTheSquareLattice) {
  auto e = WeierstrassModel::short_form("y^2 = x^3 + x", K, q("0"), q("1"), q("0"));
  EXPECT_TRUE(e.c6().is_zero());
  EXPECT_EQ(e.j_invariant(), q("1728"));
}

TEST_F(ModularTest, DiscriminantValuation) {
  auto e = WeierstrassModel::short_form("y^2 = x^3 + t", K, q("0"), q("0"), q("t"));
  EXPECT_EQ(e.discriminant(), q("-432*t^2"));
  EXPECT_EQ(valuation(e.discriminant(), place_at(Rational(0))), 2);
  EXPECT_EQ(valuation(e.discriminant(), place_infinity()), -2);
}

TEST_F(ModularTest, SingularModelHasNoJ) {
  auto e = WeierstrassModel::short_form("y^2 = x^3", K, q("0"), q("0"), q("0"));
  EXPECT_THROW(e.j_invariant(), NonInvertible);
}

TEST_F(ModularTest, GroupLawIdentities) {
  const auto& e = weierstrass_e7();
  auto p = torsion_point_e7();
  ASSERT_TRUE(on_curve(p, e));
  EXPECT_EQ(ec_group_law(p, CurvePoint::origin(), e), p);
  EXPECT_EQ(ec_group_law(p, ec_negate(p, e), e), CurvePoint::origin());
  auto p2 = ec_group_law(p, p, e);
  EXPECT_TRUE(on_curve(p2, e));
  EXPECT_EQ(ec_group_law(p2, p, e), ec_group_law(p, p2, e));
  EXPECT_EQ(ec_multiply(3, p, e), ec_group_law(p2, p, e));
}

// Doubling from the tangent slope (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3).
TEST_F(ModularTest, DoublingMatchesTangentConstruction) {
  const auto& e = weierstrass_e7();
  auto p = torsion_point_e7();
  const Qt& x = p.x;
  const Qt& y = p.y;
  Qt two = q("2"), three = q("3");
  Qt slope = (three * x * x + two * e.a2 * x + e.a4 - e.a1 * y) / (two * y + e.a1 * x + e.a3);
  Qt x3 = slope * slope + e.a1 * slope - e.a2 - x - x;
  Qt y3 = -(slope + e.a1) * x3 - (y - slope * x) - e.a3;
  EXPECT_EQ(ec_group_law(p, p, e), CurvePoint::affine(x3, y3));
}

TEST_F(ModularTest, TorsionOrders) {
  const auto& e = weierstrass_e7();
  auto p = torsion_point_e7();
  EXPECT_EQ(point_order(p, e), 7);
  EXPECT_EQ(point_order(CurvePoint::origin(), e), 1);
  EXPECT_EQ(point_order(ec_multiply(3, p, e), e), 7);
  for (int k = 1; k <= 24; ++k) EXPECT_EQ(ec_multiply(k, p, e).infinity, k % 7 == 0) << k;
}

TEST_F(ModularTest, InvariantIdentity) {
  for (const auto* e : {&weierstrass_e7(), &weierstrass_e8(), &weierstrass_e8_prime()})
    EXPECT_EQ(e->c4() * e->c4() * e->c4() - e->c6() * e->c6(), q("1728") * e->discriminant()) << e->name;
}

TEST_F(ModularTest, FiberProfilesSumToTwentyFour) {
  auto p7 = fiber_profile(weierstrass_e7(), singular_places(7));
  EXPECT_TRUE(p7.complete);
  EXPECT_EQ(p7.flattened(), (std::vector<int>{7, 7, 7, 1, 1, 1}));
  EXPECT_EQ(p7.total(), 24);
  auto p8 = fiber_profile(weierstrass_e8(), singular_places(8));
  EXPECT_TRUE(p8.complete);
  EXPECT_EQ(p8.flattened(), (std::vector<int>{8, 8, 4, 2, 1, 1}));
  EXPECT_EQ(p8.total(), 24);
}

TEST_F(ModularTest, JPoleOrderMatchesFiber) {
  EXPECT_EQ(valuation(weierstrass_e7().j_invariant(), place_at(Rational(0))), -7);
}

TEST_F(ModularTest, JIdentityForZ8) { EXPECT_TRUE(j_identity_check_8()); }

TEST_F(ModularTest, CubicModel) {
  auto r = cubic_model_check_8();
  ASSERT_TRUE(r.holds);
  ASSERT_TRUE(r.cofactor);
  // Spot evaluation at (X, Y, t) = (2, 3, 5).
  std::vector<Rational> pt{Rational(2), Rational(3), Rational(5)};
  EXPECT_EQ(r.substituted.evaluate(pt), constants::cubic_model8().evaluate(pt) * r.cofactor->evaluate(pt));

  auto wrong = constants::cubic_model8() - parse_polynomial("2*X*Y", constants::cubic_vars());
  EXPECT_FALSE(cubic_model_check_8(wrong).holds);
}
