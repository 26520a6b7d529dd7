#include <gtest/gtest.h>

#include <random>

#include "linedyn/prime_field.hpp"
#include "linedyn/projgeom.hpp"
#include "linedyn/rational.hpp"

using namespace linedyn;

namespace {

ProjLine2<Rational> qline(std::int64_t a, std::int64_t b, std::int64_t c) {
  return ProjLine2<Rational>(Vec3<Rational>{Rational(a), Rational(b), Rational(c)});
}

ProjPoint2<Rational> qpoint(std::int64_t a, std::int64_t b, std::int64_t c) {
  return ProjPoint2<Rational>(Vec3<Rational>{Rational(a), Rational(b), Rational(c)});
}

Fp draw(const PrimeField& f, std::mt19937_64& rng) { return f.from_uint(rng() % f.p); }

ProjLine2<Fp> random_line(const PrimeField& f, std::mt19937_64& rng) {
  for (;;) {
    Vec3<Fp> v{draw(f, rng), draw(f, rng), draw(f, rng)};
    if (!all_vanish(v)) return ProjLine2<Fp>(v);
  }
}

}  // namespace

TEST(ProjGeom, MeetOfCoordinateLines) {
  // x = 0 and y = 0 meet at (0:0:1).
  EXPECT_EQ(meet(qline(1, 0, 0), qline(0, 1, 0)), qpoint(0, 0, 1));
  EXPECT_EQ(meet(qline(1, 1, 0), qline(1, -1, 0)), qpoint(0, 0, 5));
}

TEST(ProjGeom, MeetOfIdenticalLinesThrows) {
  EXPECT_THROW(meet(qline(1, 2, 3), qline(-2, -4, -6)), IdenticalLines);
  EXPECT_THROW(join(qpoint(1, 2, 3), qpoint(2, 4, 6)), IdenticalLines);
}

TEST(ProjGeom, JoinIsIncidentWithBothPoints) {
  auto a = qpoint(1, 2, 3), b = qpoint(-4, 0, 7);
  auto l = join(a, b);
  EXPECT_TRUE(incident(a, l));
  EXPECT_TRUE(incident(b, l));
  EXPECT_FALSE(incident(qpoint(1, 0, 0), l));
}

TEST(ProjGeom, ZeroVectorIsNotAPoint) { EXPECT_THROW(qpoint(0, 0, 0), DegenerateRealization); }

TEST(ProjGeom, CanonicalFormIsScaleInvariant) {
  EXPECT_EQ(qpoint(2, 4, 6).canonical().coords(), qpoint(-1, -2, -3).canonical().coords());
}

TEST(ProjGeom, FrameMapToItselfIsIdentity) {
  std::array<ProjLine2<Rational>, 4> q{qline(1, 0, 0), qline(0, 1, 0), qline(0, 0, 1), qline(1, 1, 1)};
  EXPECT_TRUE(frame_map(q, q).is_identity());
}

TEST(ProjGeom, FrameMapSendsFrameToFrame) {
  PrimeField f(101);
  std::mt19937_64 rng(5);
  int tested = 0;
  while (tested < 50) {
    std::array<ProjLine2<Fp>, 4> a, b;
    for (auto& l : a) l = random_line(f, rng);
    for (auto& l : b) l = random_line(f, rng);
    ProjMap2<Fp> g = ProjMap2<Fp>::identity(f);
    try {
      g = frame_map(a, b);
    } catch (const NonGenericFrame&) {
      continue;
    }
    for (int i = 0; i < 4; ++i) EXPECT_EQ(g.apply(a[i]), b[i]);
    ++tested;
  }
}

TEST(ProjGeom, ConcurrentFrameIsRejected) {
  // Three lines through (0:0:1).
  std::array<ProjLine2<Rational>, 4> bad{qline(1, 0, 0), qline(0, 1, 0), qline(1, 1, 0), qline(1, 2, 3)};
  std::array<ProjLine2<Rational>, 4> good{qline(1, 0, 0), qline(0, 1, 0), qline(0, 0, 1), qline(1, 1, 1)};
  EXPECT_THROW(frame_map(bad, good), NonGenericFrame);
  EXPECT_THROW(frame_map(good, bad), NonGenericFrame);
}

TEST(ProjGeom, InverseRoundTrip) {
  PrimeField f(100003);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    Mat3<Fp> m;
    for (auto& row : m.m)
      for (auto& v : row) v = draw(f, rng);
    if (m.det().is_zero()) continue;
    ProjMap2<Fp> g(m);
    EXPECT_TRUE(g.compose(g.inverse()).is_identity());
    auto l = random_line(f, rng);
    EXPECT_EQ(g.inverse().apply(g.apply(l)), l);
    ProjPoint2<Fp> p(Vec3<Fp>{draw(f, rng), draw(f, rng), f.one()});
    EXPECT_EQ(g.inverse().apply(g.apply(p)), p);
  }
}

TEST(ProjGeom, ProjectivitiesPreserveIncidence) {
  PrimeField f(100003);
  std::mt19937_64 rng(13);
  Mat3<Fp> m;
  do {
    for (auto& row : m.m)
      for (auto& v : row) v = draw(f, rng);
  } while (m.det().is_zero());
  ProjMap2<Fp> g(m);
  for (int i = 0; i < 50; ++i) {
    auto a = random_line(f, rng), b = random_line(f, rng);
    if (a == b) continue;
    auto p = meet(a, b);
    EXPECT_TRUE(incident(g.apply(p), g.apply(a)));
    EXPECT_EQ(g.apply(p), meet(g.apply(a), g.apply(b)));
  }
}
