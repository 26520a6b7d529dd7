#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Randomized algebraic self-checks: field and ring axioms, gcd / division /
// square-root round trips, projective equivariance of the arrangement
// operators and the period maps. Shared by the unit tests and the acceptance
// binary so both exercise exactly the same instances for a given seed.
namespace linedyn {

struct PropertyResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when all instances pass
  bool ok() const { return failures == 0 && instances > 0; }
};

std::vector<PropertyResult> run_property_suites(std::uint64_t seed, std::size_t instances = 1000);

// Individual suites.
PropertyResult property_field_axioms_rational(std::uint64_t seed, std::size_t instances);
PropertyResult property_field_axioms_prime(std::uint64_t seed, std::size_t instances);
PropertyResult property_field_axioms_extension(std::uint64_t seed, std::size_t instances);
PropertyResult property_field_axioms_ratfun(std::uint64_t seed, std::size_t instances);
PropertyResult property_polynomial_ring(std::uint64_t seed, std::size_t instances);
PropertyResult property_gcd_divide(std::uint64_t seed, std::size_t instances);
PropertyResult property_sqrt(std::uint64_t seed, std::size_t instances);
PropertyResult property_lambda_equivariance(std::uint64_t seed, std::size_t instances);
PropertyResult property_period_map(std::uint64_t seed, std::size_t instances);

}  // namespace linedyn
