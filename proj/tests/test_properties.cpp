#include <gtest/gtest.h>

#include "linedyn/properties.hpp"

using namespace linedyn;

TEST(Properties, AllSuitesHold) {
  for (const auto& r : run_property_suites(1, 200)) {
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_failure;
    EXPECT_EQ(r.instances, 200u) << r.name;
  }
}

TEST(Properties, DifferentSeedsAlsoHold) {
  for (std::uint64_t seed : {2u, 3u}) {
    EXPECT_TRUE(property_gcd_divide(seed, 100).ok());
    EXPECT_TRUE(property_lambda_equivariance(seed, 20).ok());
    EXPECT_TRUE(property_period_map(seed, 20).ok());
  }
}
