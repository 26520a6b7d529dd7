#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linedyn/mpoly.hpp"
#include "linedyn/ratfun.hpp"
#include "linedyn/rational.hpp"

// Elliptic curves over Q(t) in long Weierstrass form
//   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6,
// their invariants, the chord-tangent group law and valuation profiles of the
// discriminant at the places of the base P^1.
namespace linedyn {

using QtField = RatFunField<Rational>;
using Qt = RatFun<Rational>;

QtField qt_field(const std::string& var = "t");
// Parse a polynomial in one variable (default "t") into Q(t).
Qt parse_qt(const std::string& text, const QtField& f);
// Parse "num" / "den".
Qt parse_qt(const std::string& num, const std::string& den, const QtField& f);

// A place of P^1_Q: a monic irreducible polynomial, or infinity.
struct Place {
  std::string name;
  UPoly<Rational> poly;  // empty for infinity
  bool infinity() const { return poly.is_zero(); }
  int degree() const { return infinity() ? 1 : poly.degree(); }
};
Place place_at(const Rational& r);  // t - r
Place place_of(const std::string& name, const UPoly<Rational>& monic_irreducible);
Place place_infinity();
// Valuation of a nonzero rational function at a place.
int valuation(const Qt& a, const Place& p);

struct WeierstrassModel {
  std::string name;
  QtField field;
  Qt a1, a2, a3, a4, a6;

  Qt b2() const;
  Qt b4() const;
  Qt b6() const;
  Qt b8() const;
  Qt c4() const;
  Qt c6() const;
  Qt discriminant() const;
  Qt j_invariant() const;  // NonInvertible when the discriminant vanishes

  static WeierstrassModel short_form(std::string name, const QtField& f, Qt a2, Qt a4, Qt a6);
};

struct CurvePoint {
  bool infinity = true;
  Qt x, y;
  static CurvePoint origin() { return CurvePoint{}; }
  static CurvePoint affine(Qt x, Qt y) { return CurvePoint{false, std::move(x), std::move(y)}; }
  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
  std::string to_string() const;
};

bool on_curve(const CurvePoint& p, const WeierstrassModel& e);
CurvePoint ec_negate(const CurvePoint& p, const WeierstrassModel& e);
CurvePoint ec_group_law(const CurvePoint& p, const CurvePoint& q, const WeierstrassModel& e);
CurvePoint ec_multiply(long k, const CurvePoint& p, const WeierstrassModel& e);
// Least k <= bound with [k]P = O, or nullopt.
std::optional<int> point_order(const CurvePoint& p, const WeierstrassModel& e, int bound = 12);

// The models printed for the two surfaces, each with its singular places.
const WeierstrassModel& weierstrass_e7();
const WeierstrassModel& weierstrass_e8();
// E8': eta^2 = xi^3 + (2 - s^2) xi^2 + xi with s = 2t^2/(t^2 - 1).
const WeierstrassModel& weierstrass_e8_prime();
const std::vector<Place>& singular_places(int n);
// p_t = (0, 4t^3/(t+1)^2) on E7.
CurvePoint torsion_point_e7();

struct FiberEntry {
  Place place;
  int scaling = 0;  // k with x -> u^(2k) x making the model integral and minimal at the place
  int order = 0;    // valuation of the discriminant of that model
  bool c4_unit = false;  // c4 does not vanish there (multiplicative reduction)
};
struct FiberProfile {
  std::vector<FiberEntry> entries;
  // Discriminant orders repeated once per geometric point, largest first.
  std::vector<int> flattened() const;
  int total() const;  // sum of order * degree
  // Every zero and pole of the discriminant and every pole of an a_i lies
  // at a listed place.
  bool complete = false;
};
FiberProfile fiber_profile(const WeierstrassModel& e, const std::vector<Place>& places);

// j(E8)(1/2 (1 - 1/t)) == j(E8')(t)
bool j_identity_check_8();

struct CubicModelCheck {
  bool holds = false;
  MPoly<Rational> substituted;  // quartic at (X, 1 + t(Y - 1), Y, 1)
  std::optional<MPoly<Rational>> cofactor;
};
// The Z8 quartic at (X, 1 + t(Y-1), Y, 1) equals cubic * cofactor in
// Q[X, Y, t]. The cubic is primitive over Q[t], so by Gauss's lemma this is
// the same as divisibility in Q(t)[X, Y].
CubicModelCheck cubic_model_check_8(const MPoly<Rational>& cubic);
CubicModelCheck cubic_model_check_8();

}  // namespace linedyn
