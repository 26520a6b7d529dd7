#pragma once

#include <array>
#include <string>
#include <vector>

#include "linedyn/mpoly.hpp"
#include "linedyn/projgeom.hpp"
#include "linedyn/rational.hpp"

// Transcribed polynomial data for the surfaces Z7, Z8, the plane maps and the
// Weierstrass models. Everything is stored as text in the notation below and
// parsed once; the self-tests in tests/test_families.cpp evaluate each
// formula so a transcription slip shows up as a matroid or surface mismatch.
//
// Variable conventions:
//   y1..y4  homogeneous coordinates of P^3 (surfaces, sigma actions)
//   x1..x3  affine chart y4 = 1 (family formulas)
//   z1..z3  coordinates of the plane P^2 under the double cover
//   t       base parameter of the elliptic fibrations
//   u       generator of an algebraic extension of Q
namespace linedyn::constants {

const std::vector<std::string>& y_vars();
const std::vector<std::string>& x_vars();
const std::vector<std::string>& z_vars();

// Quartic Z_n in y1..y4.
const MPoly<Rational>& quartic(int n);
const std::string& quartic_text(int n);

// Normal vectors of C0(x) and C1(x) as polynomials in x1..x3.
using NormalFormula = std::array<MPoly<Rational>, 3>;
const std::vector<NormalFormula>& family_c0(int n);
const std::vector<NormalFormula>& family_c1(int n);
const std::vector<std::array<std::string, 3>>& family_text(int n, int block);

// Reference normals of the first four lines of C0.
std::array<Vec3<Rational>, 4> frame_normals(int n);

// Singular points of Z_n in the order printed with their ADE labels.
struct LabeledPoint4 {
  std::string name;
  std::array<int, 4> y;
};
const std::vector<LabeledPoint4>& singular_points(int n);

// A line of P^3 given as the common zero set of two linear forms.
struct SpaceLine {
  std::string name;
  std::array<std::array<int, 4>, 2> forms;
};
// n = 7: L1..L12 (complement of the realization space). n = 8: the eight
// lines used for the lattice computation.
const std::vector<SpaceLine>& lines_on_surface(int n);

// Curves in the complement of R7 other than lines: the conic Co and the
// printed genus-one sample, each as the common zeros of polynomials in y.
struct SpaceCurve {
  std::string name;
  std::vector<MPoly<Rational>> equations;
};
const std::vector<SpaceCurve>& excluded_curves_z7();

// Polynomial maps of P^3 realizing sigma1 (degree 4) and sigma2 (degree 3).
const std::array<MPoly<Rational>, 4>& sigma_action(int which);

// A point with coordinates in Q[u]/(minpoly), coordinates written as
// polynomials in u. An empty minpoly means a rational point.
struct AlgebraicPoint {
  std::string name;
  std::vector<Rational> minpoly;  // constant term first, monic
  std::vector<MPoly<Rational>> coords;
};
// Base points of lambda on Z8 (projective, 4 coordinates).
const std::vector<AlgebraicPoint>& lambda8_base_points();
// Fixed points (w+1:-w:w:1) and period-two points (r^2+1:r^2-r+2:r:1) on Z7.
const std::vector<AlgebraicPoint>& special_points_z7();
// Indeterminacy points of F = (Q1:Q2:Q3) and of mu for n = 8 (3 coordinates).
const std::vector<AlgebraicPoint>& indeterminacy_f7();
const std::vector<AlgebraicPoint>& indeterminacy_mu8();

// Plane map data for n = 7 (in z1..z3).
struct PlaneMapData {
  MPoly<Rational> Q, Q1, Q2, Q3, R4, R7, R;
};
const PlaneMapData& plane_map7();
// Branch components for n = 8.
const MPoly<Rational>& branch_conic8();
const MPoly<Rational>& branch_quartic8();

// Named witness points.
std::array<Rational, 3> heptagon_witness();      // (-6, -25/8, 5) on Z7
std::array<std::int64_t, 3> periodic_witness();  // (794, 582, 116) on Z8 over F_1013
constexpr std::uint64_t kPeriodicPrime = 1013;

// Weierstrass data as (numerator, denominator) strings in t for a2, a4, a6.
struct WeierstrassText {
  std::string name;
  std::array<std::string, 3> num;
  std::array<std::string, 3> den;
};
const WeierstrassText& weierstrass_e7();
const WeierstrassText& weierstrass_e8();
// Cubic affine model of the Z8 fibration in X, Y, t.
const MPoly<Rational>& cubic_model8();
const std::vector<std::string>& cubic_vars();

}  // namespace linedyn::constants
