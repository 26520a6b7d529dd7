#include "linedyn/modular.hpp"

#include <algorithm>

#include "linedyn/constants.hpp"
#include "linedyn/mpoly_algos.hpp"
#include "linedyn/mpoly_parse.hpp"

namespace linedyn {

QtField qt_field(const std::string& var) { return QtField{RationalField{}, var}; }

Qt parse_qt(const std::string& text, const QtField& f) {
  return f.from_poly(parse_polynomial(text, {f.var}).to_upoly(0));
}

Qt parse_qt(const std::string& num, const std::string& den, const QtField& f) {
  return parse_qt(num, f) / parse_qt(den, f);
}

Place place_at(const Rational& r) {
  return Place{"t=" + r.to_string(), UPoly<Rational>(std::vector<Rational>{-r, Rational(1)})};
}

Place place_of(const std::string& name, const UPoly<Rational>& monic_irreducible) {
  if (monic_irreducible.degree() < 1) throw UnsupportedDegree("a finite place needs a nonconstant polynomial");
  return Place{name, monic_irreducible.monic()};
}

Place place_infinity() { return Place{"t=oo", UPoly<Rational>()}; }

int valuation(const Qt& a, const Place& p) { return p.infinity() ? a.valuation_at_infinity() : a.valuation(p.poly); }

Qt WeierstrassModel::b2() const { return a1 * a1 + field.from_int(4) * a2; }
Qt WeierstrassModel::b4() const { return field.from_int(2) * a4 + a1 * a3; }
Qt WeierstrassModel::b6() const { return a3 * a3 + field.from_int(4) * a6; }
Qt WeierstrassModel::b8() const {
  return a1 * a1 * a6 + field.from_int(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}
Qt WeierstrassModel::c4() const { return b2() * b2() - field.from_int(24) * b4(); }
Qt WeierstrassModel::c6() const {
  Qt B2 = b2();
  return -(B2 * B2 * B2) + field.from_int(36) * B2 * b4() - field.from_int(216) * b6();
}
Qt WeierstrassModel::discriminant() const {
  Qt B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -(B2 * B2 * B8) - field.from_int(8) * B4 * B4 * B4 - field.from_int(27) * B6 * B6 +
         field.from_int(9) * B2 * B4 * B6;
}
Qt WeierstrassModel::j_invariant() const {
  Qt C4 = c4();
  return C4 * C4 * C4 / discriminant();
}

WeierstrassModel WeierstrassModel::short_form(std::string name, const QtField& f, Qt a2, Qt a4, Qt a6) {
  return WeierstrassModel{std::move(name), f, f.zero(), std::move(a2), f.zero(), std::move(a4), std::move(a6)};
}

std::string CurvePoint::to_string() const {
  if (infinity) return "O";
  return "(" + x.to_string() + ", " + y.to_string() + ")";
}

bool on_curve(const CurvePoint& p, const WeierstrassModel& e) {
  if (p.infinity) return true;
  const Qt& x = p.x;
  const Qt& y = p.y;
  return y * y + e.a1 * x * y + e.a3 * y == x * x * x + e.a2 * x * x + e.a4 * x + e.a6;
}

CurvePoint ec_negate(const CurvePoint& p, const WeierstrassModel& e) {
  if (p.infinity) return p;
  return CurvePoint::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

CurvePoint ec_group_law(const CurvePoint& p, const CurvePoint& q, const WeierstrassModel& e) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const QtField& f = e.field;
  Qt lambda, nu;
  if (p.x == q.x) {
    Qt denom = p.y + q.y + e.a1 * q.x + e.a3;
    if (denom.is_zero()) return CurvePoint::origin();
    // Tangent line at p (here p = q).
    Qt d = f.from_int(2) * p.y + e.a1 * p.x + e.a3;
    lambda = (f.from_int(3) * p.x * p.x + f.from_int(2) * e.a2 * p.x + e.a4 - e.a1 * p.y) / d;
    nu = (-(p.x * p.x * p.x) + e.a4 * p.x + f.from_int(2) * e.a6 - e.a3 * p.y) / d;
  } else {
    Qt dx = q.x - p.x;
    lambda = (q.y - p.y) / dx;
    nu = (p.y * q.x - q.y * p.x) / dx;
  }
  Qt x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
  Qt y3 = -(lambda + e.a1) * x3 - nu - e.a3;
  return CurvePoint::affine(std::move(x3), std::move(y3));
}

CurvePoint ec_multiply(long k, const CurvePoint& p, const WeierstrassModel& e) {
  CurvePoint base = k < 0 ? ec_negate(p, e) : p;
  unsigned long m = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  CurvePoint acc = CurvePoint::origin();
  while (m) {
    if (m & 1u) acc = ec_group_law(acc, base, e);
    m >>= 1;
    if (m) base = ec_group_law(base, base, e);
  }
  return acc;
}

std::optional<int> point_order(const CurvePoint& p, const WeierstrassModel& e, int bound) {
  CurvePoint acc = p;
  for (int k = 1; k <= bound; ++k) {
    if (acc.infinity) return k;
    acc = ec_group_law(acc, p, e);
  }
  return std::nullopt;
}

namespace {

WeierstrassModel from_text(const constants::WeierstrassText& w, const QtField& f) {
  return WeierstrassModel::short_form(w.name, f, parse_qt(w.num[0], w.den[0], f), parse_qt(w.num[1], w.den[1], f),
                                      parse_qt(w.num[2], w.den[2], f));
}

UPoly<Rational> upoly_t(const std::string& text) { return parse_polynomial(text, {"t"}).to_upoly(0); }

}  // namespace

const WeierstrassModel& weierstrass_e7() {
  static const WeierstrassModel e = from_text(constants::weierstrass_e7(), qt_field());
  return e;
}

const WeierstrassModel& weierstrass_e8() {
  static const WeierstrassModel e = from_text(constants::weierstrass_e8(), qt_field());
  return e;
}

const WeierstrassModel& weierstrass_e8_prime() {
  static const WeierstrassModel e = [] {
    QtField f = qt_field();
    Qt s = parse_qt("2*t^2", "t^2 - 1", f);
    return WeierstrassModel::short_form("E8'", f, f.from_int(2) - s * s, f.one(), f.zero());
  }();
  return e;
}

const std::vector<Place>& singular_places(int n) {
  static const std::vector<Place> p7{place_infinity(), place_at(Rational(0)), place_at(Rational(-1)),
                                     place_of("t^3-5t^2-8t-1", upoly_t("t^3 - 5*t^2 - 8*t - 1"))};
  static const std::vector<Place> p8{place_at(Rational(1)), place_at(Rational(0)), place_infinity(),
                                     place_at(Rational(1, 2)), place_of("t^2-t-1/4", upoly_t("t^2 - t - 1/4"))};
  if (n == 7) return p7;
  if (n == 8) return p8;
  throw UnsupportedDegree("singular places are recorded for n = 7 and n = 8");
}

CurvePoint torsion_point_e7() {
  const QtField& f = weierstrass_e7().field;
  return CurvePoint::affine(f.zero(), parse_qt("4*t^3", "(t+1)^2", f));
}

std::vector<int> FiberProfile::flattened() const {
  std::vector<int> out;
  for (const auto& e : entries)
    for (int i = 0; i < e.place.degree(); ++i) out.push_back(e.order);
  std::sort(out.rbegin(), out.rend());
  return out;
}

int FiberProfile::total() const {
  int t = 0;
  for (const auto& e : entries) t += e.order * e.place.degree();
  return t;
}

namespace {

// ceil(a / b) for b > 0
int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// f with every listed finite place divided out as often as possible.
UPoly<Rational> strip_places(UPoly<Rational> f, const std::vector<Place>& places) {
  for (const auto& p : places) {
    if (p.infinity()) continue;
    int k = factor_multiplicity(f, p.poly);
    for (int i = 0; i < k; ++i) f = divmod(f, p.poly).first;
  }
  return f;
}

}  // namespace

FiberProfile fiber_profile(const WeierstrassModel& e, const std::vector<Place>& places) {
  Qt delta = e.discriminant();
  if (delta.is_zero()) throw NonInvertible("singular Weierstrass model: discriminant is zero");
  Qt c4 = e.c4();
  const std::array<std::pair<const Qt*, int>, 5> coeffs{
      {{&e.a1, 1}, {&e.a2, 2}, {&e.a3, 3}, {&e.a4, 4}, {&e.a6, 6}}};
  FiberProfile prof;
  for (const auto& p : places) {
    // Smallest k with v(a_i) + i k >= 0 for all i: the model rescaled by
    // u = (local parameter)^k is integral there and no further scaling works.
    int k = 0;
    bool first = true;
    for (const auto& [a, i] : coeffs) {
      if (a->is_zero()) continue;
      int need = ceil_div(-valuation(*a, p), i);
      k = first ? need : std::max(k, need);
      first = false;
    }
    FiberEntry fe{p, k, valuation(delta, p) + 12 * k, false};
    fe.c4_unit = !c4.is_zero() && valuation(c4, p) + 4 * k == 0;
    if (fe.order > 0) prof.entries.push_back(fe);
  }
  bool complete = strip_places(delta.num(), places).degree() == 0 && strip_places(delta.den(), places).degree() == 0;
  for (const auto& [a, i] : coeffs)
    if (!a->is_zero() && strip_places(a->den(), places).degree() != 0) complete = false;
  prof.complete = complete;
  return prof;
}

bool j_identity_check_8() {
  const QtField& f = weierstrass_e8().field;
  Qt g = f.from_rational(Rational(1, 2)) * (f.one() - f.variable().inv());
  return weierstrass_e8().j_invariant().compose(g) == weierstrass_e8_prime().j_invariant();
}

CubicModelCheck cubic_model_check_8(const MPoly<Rational>& cubic) {
  RationalField Q;
  const int nv = 3;  // X, Y, t
  auto X = MPoly<Rational>::variable(Q, nv, 0);
  auto Y = MPoly<Rational>::variable(Q, nv, 1);
  auto T = MPoly<Rational>::variable(Q, nv, 2);
  auto one = MPoly<Rational>::constant(Q, nv, Q.one());
  CubicModelCheck out;
  out.substituted = constants::quartic(8).substitute({X, one + T * (Y - one), Y, one});
  out.cofactor = exact_divide(out.substituted, cubic);
  out.holds = out.cofactor.has_value() && !out.cofactor->is_zero();
  return out;
}

CubicModelCheck cubic_model_check_8() { return cubic_model_check_8(constants::cubic_model8()); }

}  // namespace linedyn
