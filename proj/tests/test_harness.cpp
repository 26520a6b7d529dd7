#include <gtest/gtest.h>

#include "linedyn/constants.hpp"
#include "linedyn/families.hpp"
#include "linedyn/harness.hpp"
#include "linedyn/io.hpp"
#include "linedyn/mpoly_parse.hpp"

using namespace linedyn;

TEST(Harness, UnknownCaseIsRejected) {
  EXPECT_THROW(run_case("no-such-case", RunOptions{}), UnknownCase);
  EXPECT_THROW(run_cases({"matroids", "no-such-case"}, RunOptions{}, 2), UnknownCase);
}

TEST(Harness, CatalogIdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& c : case_catalog()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.reference.empty()) << c.id;
  }
  EXPECT_EQ(ids.size(), 19u);
}

TEST(Harness, SameSeedGivesIdenticalJson) {
  RunOptions opts;
  opts.seed = 7;
  auto a = run_cases({"matroids", "tvectors7", "multiplier8"}, opts, 2);
  auto b = run_cases({"matroids", "tvectors7", "multiplier8"}, opts, 1);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].to_json(false).dump(), b[i].to_json(false).dump());
  EXPECT_EQ(a[0].id, "matroids");
  EXPECT_EQ(a[2].id, "multiplier8");
}

TEST(Harness, ReportStructure) {
  auto r = run_case("periodic8", RunOptions{});
  EXPECT_EQ(r.status, "pass");
  EXPECT_FALSE(r.checks.empty());
  ASSERT_NE(r.check("fixed_point"), nullptr);
  EXPECT_TRUE(r.check_passed("fixed_point"));
  EXPECT_EQ(r.check("nonexistent"), nullptr);
  auto j = r.to_json(false);
  EXPECT_EQ(j["case"], "periodic8");
  EXPECT_FALSE(j.contains("seconds"));
  EXPECT_TRUE(r.to_json(true).contains("seconds"));
}

TEST(Harness, ExitCodes) {
  VerificationReport pass, fail, skip;
  pass.status = "pass";
  fail.status = "fail";
  skip.status = "skip";
  EXPECT_EQ(exit_code_for({pass, pass}), 0);
  EXPECT_EQ(exit_code_for({pass, skip}), 2);
  EXPECT_EQ(exit_code_for({skip, fail}), 1);
}

TEST(Io, PolynomialRoundTrip) {
  auto p = parse_polynomial("3/4*y1^2*y2 - y3*y4^3 + 7", constants::y_vars());
  auto j = polynomial_json(p, constants::y_vars());
  EXPECT_EQ(polynomial_from_json(j), p);
  EXPECT_EQ(polynomial_from_json(nlohmann::json::parse(j.dump())), p);
  EXPECT_THROW(polynomial_from_json(nlohmann::json{{"vars", 3}}), ParseError);
}

TEST(Io, ArrangementRoundTrip) {
  auto w = constants::heptagon_witness();
  auto r = parametrized_realization(7, ChartPoint<Rational>{w[0], w[1], w[2]});
  auto j = arrangement_json(r.all());
  EXPECT_EQ(rational_arrangement_from_json(j), r.all());

  PrimeField f(100003);
  std::mt19937_64 rng(97);
  auto a = checked_realization(8, random_realizable_point(8, f, rng, 50)).all();
  EXPECT_EQ(prime_arrangement_from_json(nlohmann::json::parse(arrangement_json(a).dump())), a);
}
