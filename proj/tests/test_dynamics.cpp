#include <gtest/gtest.h>

#include <random>

#include "linedyn/constants.hpp"
#include "linedyn/dynamics.hpp"

using namespace linedyn;

namespace {

ProjMap2<Fp> random_projectivity(const PrimeField& f, std::mt19937_64& rng) {
  for (;;) {
    Mat3<Fp> m;
    for (auto& row : m.m)
      for (auto& v : row) v = f.from_uint(rng() % f.p);
    if (!m.det().is_zero()) return ProjMap2<Fp>(m);
  }
}

ChartPoint<Fp> periodic_point(const PrimeField& f) {
  auto w = constants::periodic_witness();
  return {f.from_int(w[0]), f.from_int(w[1]), f.from_int(w[2])};
}

template <class S>
S moebius(const S& t) {
  return -(t + t.field().one()).inv();
}

}  // namespace

TEST(Dynamics, PeriodMapRoundTripAndInvariance) {
  PrimeField f(100003);
  std::mt19937_64 rng(53);
  for (int n : {7, 8}) {
    for (int i = 0; i < 10; ++i) {
      auto x = random_realizable_point(n, f, rng, 50);
      auto a = checked_realization(n, x).all();
      EXPECT_TRUE(chart_equal(period_map(n, a), x));
      EXPECT_TRUE(chart_equal(period_map(n, apply(random_projectivity(f, rng), a)), x));
    }
  }
}

TEST(Dynamics, PeriodicWitnessIsFixed) {
  PrimeField f(constants::kPeriodicPrime);
  auto x = periodic_point(f);
  EXPECT_TRUE(chart_equal(period_map(8, checked_realization(8, x).all()), x));
  EXPECT_TRUE(chart_equal(lambda_step(8, x), x));
  auto o = orbit(8, x, 5);
  ASSERT_TRUE(o.period);
  EXPECT_EQ(*o.period, 1);
  auto arr = arrangement_period(8, x, 5);
  ASSERT_TRUE(arr);
  EXPECT_EQ(*arr, 3);
}

TEST(Dynamics, ImagesLieOnTheSurfaceAndRealize) {
  PrimeField f(100003);
  std::mt19937_64 rng(59);
  for (int n : {7, 8}) {
    for (int i = 0; i < 10; ++i) {
      auto y = lambda_step(n, random_realizable_point(n, f, rng, 50));
      EXPECT_TRUE(chart_eval(n, y).is_zero());
      EXPECT_NO_THROW(checked_realization(n, y));
    }
  }
}

TEST(Dynamics, BaseCurveActionHasOrderThree) {
  PrimeField f(101);
  std::mt19937_64 rng(61);
  int tested = 0;
  for (int i = 0; i < 200 && tested < 20; ++i) {
    ChartPoint<Fp> x;
    ChartPoint<Fp> y;
    try {
      x = random_realizable_point(7, f, rng, 50);
      y = lambda_step(7, x);
      if ((fibration_parameter(x) + f.one()).is_zero()) continue;
      EXPECT_EQ(fibration_parameter(y), moebius(fibration_parameter(x)));
      EXPECT_TRUE(sigma0_base_check(x));
      ++tested;
    } catch (const Error&) {
    }
  }
  EXPECT_EQ(tested, 20);
}

TEST(Dynamics, MoebiusMapHasOrderThree) {
  PrimeField f(100003);
  for (std::uint64_t v = 2; v < 200; ++v) {
    Fp t = f.from_uint(v);
    EXPECT_EQ(moebius(moebius(moebius(t))), t);
  }
  Rational t(5, 7);
  EXPECT_EQ(moebius(moebius(moebius(t))), t);
}

TEST(Dynamics, IdentityHasMultiplierOne) {
  PrimeField f(100003);
  std::mt19937_64 rng(67);
  for (int n : {7, 8}) {
    for (int i = 0; i < 5; ++i) {
      auto x = random_chart_point(n, f, rng);
      EXPECT_EQ(form_multiplier_of(n, x, [](const ChartPoint<Jet<Fp>>& xj) { return xj; }), f.one());
    }
  }
}

TEST(Dynamics, DegreeHistogramPartitionsTheDomain) {
  for (int n : {7, 8}) {
    auto h = degree_estimate(n, 11);
    std::size_t total = 0;
    for (auto [size, count] : h.fibers) total += size * count;
    EXPECT_EQ(total, h.domain_points);
    EXPECT_EQ(h.domain_points + h.undefined_points, enumerate_chart_points(n, 11).size());
  }
}

TEST(Dynamics, OrbitsOverSmallFieldsTerminate) {
  PrimeField f(31);
  std::mt19937_64 rng(71);
  for (int n : {7, 8}) {
    for (int i = 0; i < 5; ++i) {
      auto o = orbit(n, random_chart_point(n, f, rng), 2000);
      EXPECT_NE(o.termination, "budget");
      EXPECT_FALSE(o.points.empty());
    }
  }
}

TEST(Dynamics, SigmaOneMatchesPolynomialAction) {
  PrimeField f(100003);
  std::mt19937_64 rng(73);
  for (int i = 0; i < 10; ++i) {
    auto x = random_realizable_point(7, f, rng, 50);
    auto geometric = aut_action(7, sigma1(), x);
    auto poly = sigma_polynomial_action(1, homogenize(x, f));
    EXPECT_EQ(homogenize(geometric, f), poly);
  }
}
