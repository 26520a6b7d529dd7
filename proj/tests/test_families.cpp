#include <gtest/gtest.h>

#include <random>

#include "linedyn/constants.hpp"
#include "linedyn/families.hpp"
#include "linedyn/matroids.hpp"

using namespace linedyn;

namespace {

ProjPoint3<Rational> qpoint(Rational a, Rational b, Rational c, Rational d) {
  return ProjPoint3<Rational>(std::array<Rational, 4>{a, b, c, d});
}

// Independent count: every canonical representative of P^3(F_p).
std::size_t full_scan(int n, std::uint64_t p) {
  PrimeField f(p);
  std::size_t count = 0;
  for (int lead = 0; lead < 4; ++lead) {
    std::uint64_t total = 1;
    for (int j = lead + 1; j < 4; ++j) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::array<Fp, 4> y{f.zero(), f.zero(), f.zero(), f.zero()};
      y[lead] = f.one();
      std::uint64_t v = idx;
      for (int j = lead + 1; j < 4; ++j, v /= p) y[j] = f.from_uint(v % p);
      if (surface_eval(n, ProjPoint3<Fp>(y)).is_zero()) ++count;
    }
  }
  return count;
}

}  // namespace

TEST(Families, QuarticShape) {
  for (int n : {7, 8}) {
    const auto& q = constants::quartic(n);
    EXPECT_TRUE(q.is_homogeneous());
    EXPECT_EQ(q.degree(), 4);
    EXPECT_EQ(q.degree_in(0), 2);
  }
}

TEST(Families, SingularPointsAreSingular) {
  RationalField Q;
  for (int n : {7, 8}) {
    const auto& q = constants::quartic(n);
    EXPECT_EQ(constants::singular_points(n).size(), n == 7 ? 8u : 6u);
    for (const auto& sp : constants::singular_points(n)) {
      std::vector<Rational> y;
      for (int v : sp.y) y.push_back(Q.from_int(v));
      EXPECT_TRUE(q.evaluate(y).is_zero()) << sp.name;
      for (int v = 0; v < 4; ++v) EXPECT_TRUE(q.derivative(v).evaluate(y).is_zero()) << sp.name << " d/dy" << v + 1;
    }
  }
}

TEST(Families, SurfaceEvalExamples) {
  EXPECT_TRUE(surface_eval(7, qpoint(Rational(-6), Rational(-25, 8), Rational(5), Rational(1))).is_zero());
  EXPECT_EQ(surface_eval(7, qpoint(Rational(1), Rational(1), Rational(0), Rational(0))), Rational(1));
  PrimeField f(constants::kPeriodicPrime);
  auto w = constants::periodic_witness();
  ProjPoint3<Fp> y(std::array<Fp, 4>{f.from_int(w[0]), f.from_int(w[1]), f.from_int(w[2]), f.one()});
  EXPECT_TRUE(surface_eval(8, y).is_zero());
}

// Transcription self-test: every family formula is evaluated at random
// surface points and the union must realize the matroid exactly.
TEST(Families, TranscribedFormulasRealizeTheMatroids) {
  for (std::uint64_t p : {101ull, 100003ull}) {
    PrimeField f(p);
    std::mt19937_64 rng(p);
    for (int n : {7, 8}) {
      EXPECT_EQ(constants::family_c0(n).size(), static_cast<std::size_t>(n));
      EXPECT_EQ(constants::family_c1(n).size(), static_cast<std::size_t>(n));
      int realized = 0;
      for (int i = 0; i < 40; ++i) {
        auto x = random_chart_point(n, f, rng);
        ASSERT_TRUE(chart_eval(n, x).is_zero());
        try {
          auto r = checked_realization(n, x);
          EXPECT_EQ(r.c0.size(), static_cast<std::size_t>(n));
          EXPECT_FALSE(r.all().has_duplicates());
          ++realized;
        } catch (const DegenerateRealization&) {
        }
      }
      EXPECT_GE(realized, p == 101 ? 25 : 39) << "n = " << n << ", p = " << p;
    }
  }
}

TEST(Families, HeptagonWitnessRealizesM7) {
  auto w = constants::heptagon_witness();
  auto r = checked_realization(7, ChartPoint<Rational>{w[0], w[1], w[2]});
  EXPECT_EQ(matroid_from_arrangement(r.all()), matroid_M7());
}

TEST(Families, FrameOfTheFamilies) {
  RationalField Q;
  for (int n : {7, 8}) {
    auto fr = constants::frame_normals(n);
    auto w = n == 7 ? constants::heptagon_witness() : std::array<Rational, 3>{};
    if (n == 8) continue;
    auto r = parametrized_realization(n, ChartPoint<Rational>{w[0], w[1], w[2]});
    for (int i = 0; i < 4; ++i) EXPECT_EQ(r.c0[i], ProjLine2<Rational>(fr[i]));
  }
  auto f8 = constants::frame_normals(8);
  EXPECT_EQ(ProjLine2<Rational>(f8[3]), ProjLine2<Rational>(Vec3<Rational>{Q.one(), Q.one(), Q.one()}));
}

TEST(Families, ExcludedLocusMembership) {
  // L1 is y2 = y3 = 0.
  auto on_l1 = excluded_locus_member(qpoint(Rational(3), Rational(0), Rational(0), Rational(2)));
  EXPECT_NE(std::find(on_l1.begin(), on_l1.end(), "L1"), on_l1.end());
  auto off_l1 = excluded_locus_member(qpoint(Rational(0), Rational(0), Rational(1), Rational(0)));
  EXPECT_EQ(std::find(off_l1.begin(), off_l1.end(), "L1"), off_l1.end());

  // Conic: y2 + y3 = y4 and y1 y3 - y3^2 - y1 y4 = 0, parametrized by s.
  for (int s = 2; s < 6; ++s) {
    Rational sr(s);
    auto y = qpoint(-sr * sr, Rational(1), sr, Rational(1) + sr);
    ASSERT_TRUE(surface_eval(7, y).is_zero()) << s;
    auto m = excluded_locus_member(y);
    EXPECT_NE(std::find(m.begin(), m.end(), "Co"), m.end()) << s;
  }

  PrimeField f(100003);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 10; ++i) {
    auto x = random_realizable_point(7, f, rng, 50);
    EXPECT_TRUE(excluded_locus_member(homogenize(x, f)).empty());
  }
}

TEST(Families, EnumerationMatchesFullScan) {
  for (auto [n, p] : {std::pair<int, std::uint64_t>{7, 11}, {8, 13}, {7, 13}}) {
    auto pts = enumerate_surface_points(n, p);
    for (const auto& y : pts) EXPECT_TRUE(surface_eval(n, y).is_zero());
    for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_FALSE(pts[i] == pts[i - 1]);
    EXPECT_EQ(pts.size(), full_scan(n, p)) << "n = " << n << ", p = " << p;
  }
}

TEST(Families, ChartEnumerationIsTheAffinePart) {
  auto all = enumerate_surface_points(7, 11);
  auto chart = enumerate_chart_points(7, 11);
  std::size_t affine = 0;
  for (const auto& y : all) affine += !y[3].is_zero();
  EXPECT_EQ(chart.size(), affine);
}

TEST(Families, SigmaActionsPreserveZ7) {
  PrimeField f(100003);
  std::mt19937_64 rng(47);
  for (int which : {1, 2}) {
    for (int i = 0; i < 20; ++i) {
      auto y = homogenize(random_chart_point(7, f, rng), f);
      auto img = sigma_polynomial_action(which, y);
      EXPECT_TRUE(surface_eval(7, img).is_zero());
    }
  }
}
