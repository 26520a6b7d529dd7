#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "linedyn/constants.hpp"
#include "linedyn/dynamics.hpp"
#include "linedyn/families.hpp"
#include "linedyn/mpoly_algos.hpp"

// The plane maps under the double covers pi: Z_n -> P^2, (y1:y2:y3:y4) ->
// (y2:y3:y4), i.e. projection from (1:0:0:0). For n = 7 the plane map F is
// known explicitly; for n = 8 only pointwise values of mu are available,
// obtained by pushing lambda through the cover.
namespace linedyn {

struct PlaneMapModel {
  int n = 7;
  // n = 7
  MPoly<Rational> Q, Q1, Q2, Q3, R4, R7, R;
  // n = 8
  MPoly<Rational> conic, quartic;
  std::vector<constants::AlgebraicPoint> indeterminacy;
};
const PlaneMapModel& plane_map_model(int n);

// ---- the semi-conjugacy identity Q1(Q1, Q2, Q3) = Q1 R^2 -------------------

struct IdentityReport {
  bool equal = false;          // the printed identity, exactly
  int degree = 0;              // degree of the left-hand side
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  // Q1(Q1,Q2,Q3) / (Q1 R^2) when that quotient is a constant.
  std::optional<Rational> observed_scalar;
  std::size_t sampled_points = 0;  // random F_p evaluations of both sides
  std::size_t sampled_agree = 0;
};

IdentityReport verify_semiconjugacy_identity(std::uint64_t sample_prime = 100003, std::size_t samples = 100,
                                             std::uint64_t seed = 1);

// ---- branch curves ------------------------------------------------------

struct BranchData {
  MPoly<Rational> D;  // discriminant in the plane variables
  MPoly<Rational> W;  // the claimed branch curve
  MPoly<Rational> S;  // certified square root of D / (c W)
  Rational c;
};

// D = c W S^2 with S certified by poly_sqrt; CertificationFailed otherwise.
BranchData certify_branch(const MPoly<Rational>& D, const MPoly<Rational>& W);
// Discriminant of the quartic in y1, in z1..z3, certified against z1 Q
// (n = 7) or (z1^2 - z2 z3) Q8 (n = 8).
BranchData branch_curve(int n);
// disc_{y1}(Z_n) rewritten in z1..z3.
MPoly<Rational> branch_discriminant(int n);

// ---- F = (Q1 : Q2 : Q3) ---------------------------------------------------

template <class S>
ProjPoint2<S> F_eval(const Vec3<S>& z) {
  const auto f = z[0].field();
  const auto& m = constants::plane_map7();
  std::vector<S> pt{z[0], z[1], z[2]};
  Vec3<S> w{m.Q1.evaluate<S>(pt, f), m.Q2.evaluate<S>(pt, f), m.Q3.evaluate<S>(pt, f)};
  if (all_vanish(w)) throw IndeterminacyPoint("Q1, Q2, Q3 all vanish");
  return ProjPoint2<S>(w);
}

// pi(x) for a chart point: (x2 : x3 : 1).
template <class S>
Vec3<S> cover_projection(const ChartPoint<S>& x) {
  return {x[1], x[2], x[0].field().one()};
}

// ---- mu pointwise -----------------------------------------------------------

struct MuValue {
  ProjPoint2<Fp> image;
  int lifts = 0;          // chart points of Z_n over z
  int lifts_in_domain = 0;  // of which lambda was defined
};

// Lift z (z3 != 0) to Z_n by the quadratic in y1 and return pi(lambda(lift)).
// NoLift when there is no F_p lift in the chart, DegenerateOperator when
// lambda is undefined at every lift, CertificationFailed when two lifts give
// different images.
MuValue mu_pointwise(int n, const Vec3<Fp>& z);

struct MuInterpolation {
  ProjPoint2<Fp> image;
  int degree = 0;  // degree of mu restricted to the sampled line
  int samples = 0;
};

// mu at z through its restriction to a random line z + s v: evaluate
// mu_pointwise at `samples` points of the line, find the coprime polynomial
// triple of minimal degree matching them (a nullspace computation), and
// evaluate it at s = 0. Works at points where no lift lies in lambda's domain,
// e.g. on the branch curve. BudgetExceeded if no degree <= max_degree fits.
MuInterpolation mu_via_line_interpolation(int n, const Vec3<Fp>& z, std::mt19937_64& rng, int samples = 40,
                                          int max_degree = 14);

// ---- commuting square (n = 7) -------------------------------------------

struct SquareCheck {
  bool holds = false;
  ProjPoint2<Fp> via_lambda;  // pi(lambda(x))
  ProjPoint2<Fp> via_F;       // F(pi(x))
};
// Errors of lambda_step and F_eval propagate.
SquareCheck commuting_square_check(const ChartPoint<Fp>& x);

// ---- degrees of iterates -----------------------------------------------

struct IterateDegree {
  int k = 0;
  int raw_degree = 0;  // degree of F composed with the reduced F^(k-1)
  int gcd_degree = 0;
  int degree = 0;      // degree after removing the common factor
};

// Degrees of F, F^2, ..., F^k over Q. Each step composes F with the reduced
// previous iterate and divides out the gcd of the three components.
std::vector<IterateDegree> iterate_degrees(int k);
int iterate_degree(int k);
// The same computation over F_p, used as an independent oracle.
std::vector<IterateDegree> iterate_degrees_mod_p(int k, std::uint64_t p);

}  // namespace linedyn
