#include "linedyn/constants.hpp"

#include "linedyn/errors.hpp"
#include "linedyn/mpoly_parse.hpp"

namespace linedyn::constants {

namespace {

void check_n(int n) {
  if (n != 7 && n != 8) throw UnsupportedDegree("surface index must be 7 or 8, got " + std::to_string(n));
}

const std::vector<std::string>& u_vars() {
  static const std::vector<std::string> v{"u"};
  return v;
}

MPoly<Rational> y_poly(const std::string& s) { return parse_polynomial(s, y_vars()); }
MPoly<Rational> z_poly(const std::string& s) { return parse_polynomial(s, z_vars()); }

std::vector<NormalFormula> parse_family(const std::vector<std::array<std::string, 3>>& text) {
  std::vector<NormalFormula> out;
  for (const auto& row : text)
    out.push_back({parse_polynomial(row[0], x_vars()), parse_polynomial(row[1], x_vars()),
                   parse_polynomial(row[2], x_vars())});
  return out;
}

AlgebraicPoint algebraic(std::string name, std::vector<Rational> minpoly, const std::vector<std::string>& coords) {
  AlgebraicPoint p{std::move(name), std::move(minpoly), {}};
  for (const auto& c : coords) p.coords.push_back(parse_polynomial(c, u_vars()));
  return p;
}

const std::string kQuartic7 =
    "y1^2*y2^2 + y1^2*y2*y3 - y1*y2^2*y3 - y1*y2*y3^2 - y1^2*y2*y4 - y1*y2^2*y4 + y1*y2*y3*y4"
    " - y2*y3^2*y4 + y1*y2*y4^2 + y3^2*y4^2";
const std::string kQuartic8 =
    "y1*y2^2*y3 - y1^2*y2*y4 + y1*y2^2*y4 + y1^2*y3*y4 - 2*y1*y2*y3*y4 - y1*y3^2*y4 + y1*y3*y4^2"
    " - y2*y3*y4^2 + y3^2*y4^2";

// Repeated entries of the n = 7 formulas.
const std::string kA7 = "-x1*x2^2 - x1*x2*x3 + x1*x2 - x2*x3 + x3";
const std::string kD7 = "x2^2 + x2*x3 - x2 - x3";

const std::vector<std::array<std::string, 3>>& c0_text7() {
  static const std::vector<std::array<std::string, 3>> t = {
      {"1", "0", "0"},
      {"0", "1", "0"},
      {"0", "0", "1"},
      {"-1", "1", "1"},
      {kA7, "x1*x2 + x1*x3 - x1", "x2 - 1"},
      {kA7, "x1*x2 + x1*x3 - x1 + x2^2 + x2*x3 - 2*x2 - x3 + 1", kD7},
      {"-x1*x2^2 - x1*x2*x3 + x1*x2 + x3^2", "x1*x2 + x1*x3 - x1 - x2*x3 - x3^2 + x3", kD7},
  };
  return t;
}

const std::vector<std::array<std::string, 3>>& c1_text7() {
  static const std::vector<std::array<std::string, 3>> t = {
      {"-x1*x2^2 - x1*x2*x3 + x1*x2 + x3^2",
       "x1*x2^2 + 2*x1*x2*x3 - x1*x2 + x1*x3^2 - x1*x3 - x2^2*x3 - 2*x2*x3^2 + x2*x3 - x3^3 + x3^2", kD7},
      {"-x1*x2 - x1*x3 + x1", "x1*x2 + x1*x3 - x1", "x2 - 1"},
      {"-x2", "1", "0"},
      {"-x1*x2^3 - 2*x1*x2^2*x3 + x1*x2^2 - x1*x2*x3^2 + x1*x2*x3 - x2^2*x3 - x2*x3^2 + x2*x3 + x3^2",
       "x1*x2 + x1*x3 - x1 + x2^2 + x2*x3 - 2*x2 - x3 + 1", kD7},
      {kA7, "0", kD7},
      {"-x2^2 - x2*x3 + x2 + x3", "x1*x2 + x1*x3 - x1 - x2*x3 - x3^2 + x3", kD7},
      {"0", "1", "1"},
  };
  return t;
}

const std::vector<std::array<std::string, 3>>& c0_text8() {
  static const std::vector<std::array<std::string, 3>> t = {
      {"1", "0", "0"},
      {"0", "1", "0"},
      {"0", "0", "1"},
      {"1", "1", "1"},
      {"x1 - x2", "x1^2 - x1*x2 - x1*x3 + x1 - x2 + x3", "x1 - x2*x3 - x2 + x3"},
      {"x1*x2 - x1*x3 - x2 + x3", "x1*x2^2 - x1*x2 - x1*x3 + x1 - x2 + x3", "x1*x2*x3 - 2*x1*x3 + x1 - x2 + x3"},
      {"x1 - 1", "x1*x2 - x2", "x1 - x2"},
      {"1", "x1", "x3"},
  };
  return t;
}

const std::vector<std::array<std::string, 3>>& c1_text8() {
  static const std::vector<std::array<std::string, 3>> t = {
      {"x1*x2 - x1*x3 - x2 + x3", "x1*x2^2 - x1*x2 - x1*x3 + x1 - x2 + x3", "x1*x2 - x1*x3 - x2^2 + x2*x3"},
      {"x1^2*x2 - x1^2*x3 - x1*x2^2 + x1*x2*x3 - x1*x2 + x1*x3 + x2^2 - x2*x3",
       "x1^3*x2 - x1^3*x3 - x1^2*x2^2 + x1^2*x3^2 + 2*x1*x2*x3 - x1*x2 - 2*x1*x3^2 + x1*x3 + x2^2 - 2*x2*x3 + x3^2",
       "x1^2*x2*x3 - x1^2*x2 - x1^2*x3 + x1^2 + x1*x2^2 - 2*x1*x2 - x1*x3^2 + 2*x1*x3 + x2^2 - 2*x2*x3 + x3^2"},
      {"x1 - x2", "x1 - x2", "x1 - x2*x3 - x2 + x3"},
      {"x3", "x1*x2", "x3"},
      {"0", "1", "1"},
      {"x1 - 1", "0", "x1 - x3"},
      {"1", "x1", "0"},
      {"1", "x2", "x3"},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& y_vars() {
  static const std::vector<std::string> v{"y1", "y2", "y3", "y4"};
  return v;
}
const std::vector<std::string>& x_vars() {
  static const std::vector<std::string> v{"x1", "x2", "x3"};
  return v;
}
const std::vector<std::string>& z_vars() {
  static const std::vector<std::string> v{"z1", "z2", "z3"};
  return v;
}

const std::string& quartic_text(int n) {
  check_n(n);
  return n == 7 ? kQuartic7 : kQuartic8;
}

const MPoly<Rational>& quartic(int n) {
  check_n(n);
  static const MPoly<Rational> q7 = y_poly(kQuartic7);
  static const MPoly<Rational> q8 = y_poly(kQuartic8);
  return n == 7 ? q7 : q8;
}

const std::vector<std::array<std::string, 3>>& family_text(int n, int block) {
  check_n(n);
  if (block != 0 && block != 1) throw UnsupportedDegree("family block must be 0 or 1");
  if (n == 7) return block == 0 ? c0_text7() : c1_text7();
  return block == 0 ? c0_text8() : c1_text8();
}

const std::vector<NormalFormula>& family_c0(int n) {
  check_n(n);
  static const std::vector<NormalFormula> f7 = parse_family(c0_text7());
  static const std::vector<NormalFormula> f8 = parse_family(c0_text8());
  return n == 7 ? f7 : f8;
}

const std::vector<NormalFormula>& family_c1(int n) {
  check_n(n);
  static const std::vector<NormalFormula> f7 = parse_family(c1_text7());
  static const std::vector<NormalFormula> f8 = parse_family(c1_text8());
  return n == 7 ? f7 : f8;
}

std::array<Vec3<Rational>, 4> frame_normals(int n) {
  check_n(n);
  Rational fourth0 = n == 7 ? Rational(-1) : Rational(1);
  return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {fourth0, 1, 1}}};
}

const std::vector<LabeledPoint4>& singular_points(int n) {
  check_n(n);
  static const std::vector<LabeledPoint4> s7 = {
      {"s1", {0, 0, 0, 1}}, {"s2", {1, 0, 0, 1}}, {"s3", {0, 0, 1, 0}},  {"s4", {1, 0, 1, 0}},
      {"s5", {0, 1, 0, 0}}, {"s6", {0, 1, 0, 1}}, {"s7", {1, -1, 1, 0}}, {"s8", {1, 0, 0, 0}},
  };
  static const std::vector<LabeledPoint4> s8 = {
      {"A2", {1, 0, 0, 0}}, {"A2", {0, 1, 0, 0}}, {"A3", {0, 0, 1, 0}},
      {"A4", {0, 0, 0, 1}}, {"A3", {1, 1, 1, 1}}, {"A1", {1, 0, 1, 0}},
  };
  return n == 7 ? s7 : s8;
}

const std::vector<SpaceLine>& lines_on_surface(int n) {
  check_n(n);
  static const std::vector<SpaceLine> l7 = {
      {"L1", {{{0, 1, 0, 0}, {0, 0, 1, 0}}}},   {"L2", {{{1, 0, 0, 0}, {0, 0, 1, 0}}}},
      {"L3", {{{0, 1, 0, 0}, {0, 0, 0, 1}}}},   {"L4", {{{1, 0, -1, 0}, {0, 0, 0, 1}}}},
      {"L5", {{{1, 0, 0, 0}, {0, 0, 0, 1}}}},   {"L6", {{{0, 1, 0, -1}, {0, 0, 1, 0}}}},
      {"L7", {{{1, 0, -1, -1}, {0, 1, 1, 0}}}}, {"L8", {{{1, 0, -1, 0}, {0, 1, 1, 0}}}},
      {"L9", {{{0, 1, 1, 0}, {0, 0, 0, 1}}}},   {"L10", {{{1, 0, 0, -1}, {0, 0, 1, 0}}}},
      {"L11", {{{1, 0, -1, 0}, {0, 1, 0, -1}}}}, {"L12", {{{1, 0, 0, 0}, {0, 1, 0, -1}}}},
  };
  static const std::vector<SpaceLine> l8 = {
      {"y1=y3=0", {{{1, 0, 0, 0}, {0, 0, 1, 0}}}},
      {"y1=y4=0", {{{1, 0, 0, 0}, {0, 0, 0, 1}}}},
      {"y2=y3=0", {{{0, 1, 0, 0}, {0, 0, 1, 0}}}},
      {"y2=y4=0", {{{0, 1, 0, 0}, {0, 0, 0, 1}}}},
      {"y3=y4=0", {{{0, 0, 1, 0}, {0, 0, 0, 1}}}},
      {"y1-y4=y2-y4=0", {{{1, 0, 0, -1}, {0, 1, 0, -1}}}},
      {"y1-y3=y2-y4=0", {{{1, 0, -1, 0}, {0, 1, 0, -1}}}},
      {"y2-y4=y3-y4=0", {{{0, 1, 0, -1}, {0, 0, 1, -1}}}},
  };
  return n == 7 ? l7 : l8;
}

const std::vector<SpaceCurve>& excluded_curves_z7() {
  static const std::vector<SpaceCurve> c = {
      {"Co", {y_poly("y1*y3 - y3^2 - y1*y4"), y_poly("y2 + y3 - y4")}},
      {"E_sample", {y_poly("y1^2 - 2*y1*y3 + y3^2 - y1*y4"), y_poly("y2^2 + y2*y3 + y1*y4 - y3*y4 - y4^2")}},
  };
  return c;
}

const std::array<MPoly<Rational>, 4>& sigma_action(int which) {
  static const std::array<MPoly<Rational>, 4> s1 = {
      y_poly("y1*y2^2*y3 + y1*y2*y3^2 - y2^2*y3^2 - y2*y3^3 - y1*y2*y3*y4 - y2^2*y3*y4 + y2*y3*y4^2 + y3^2*y4^2"),
      y_poly("y1*y2^3 + y1*y2^2*y3 + y2^2*y3^2 + y2*y3^3 - 2*y1*y2^2*y4 - y1*y2*y3*y4 - 2*y2*y3^2*y4 - y3^3*y4"
             " + y1*y2*y4^2 + y3^2*y4^2"),
      y_poly("y1*y2^2*y3 + y1*y2*y3^2 - y2^2*y3^2 - y2*y3^3 - y1*y2*y3*y4 + y2*y3^2*y4"),
      y_poly("y2^3*y3 + 2*y2^2*y3^2 + y2*y3^3 - 2*y2^2*y3*y4 - 3*y2*y3^2*y4 - y3^3*y4 + y2*y3*y4^2 + y3^2*y4^2"),
  };
  static const std::array<MPoly<Rational>, 4> s2 = {
      y_poly("-y2^2*y3 - y2*y3^2 + y2*y3*y4"),
      y_poly("-y1*y2*y3 + y2*y3^2 + y2*y3*y4 - y3*y4^2"),
      y_poly("y1*y2^2 + y1*y2*y3 - y2^2*y3 - y2*y3^2 - y1*y2*y4 + y2*y3*y4"),
      y_poly("y2*y3*y4 - y3*y4^2"),
  };
  if (which == 1) return s1;
  if (which == 2) return s2;
  throw UnsupportedDegree("sigma action index must be 1 or 2");
}

const std::vector<AlgebraicPoint>& lambda8_base_points() {
  static const std::vector<AlgebraicPoint> p = {
      algebraic("octagon+", {-2, 0, 1}, {"-u-1", "u+2", "2*u+3", "1"}),
      algebraic("octagon-", {-2, 0, 1}, {"u-1", "-u+2", "-2*u+3", "1"}),
      algebraic("ceva+", {1, 0, 1}, {"u", "0", "1", "1"}),
      algebraic("ceva-", {1, 0, 1}, {"-u", "0", "1", "1"}),
      algebraic("(1:1:0:1)", {}, {"1", "1", "0", "1"}),
      algebraic("(0:1:1:0)", {}, {"0", "1", "1", "0"}),
      algebraic("(0:1:0:1)", {}, {"0", "1", "0", "1"}),
  };
  return p;
}

const std::vector<AlgebraicPoint>& special_points_z7() {
  static const std::vector<AlgebraicPoint> p = {
      algebraic("fixed(w)", {1, 1, 1}, {"u+1", "-u", "u", "1"}),
      algebraic("period2(r)", {1, -1, 3, -1, 1}, {"u^2+1", "u^2-u+2", "u", "1"}),
  };
  return p;
}

const std::vector<AlgebraicPoint>& indeterminacy_f7() {
  static const std::vector<AlgebraicPoint> p = {
      algebraic("q1", {}, {"0", "0", "1"}),  algebraic("q2", {}, {"1", "0", "1"}),
      algebraic("q3", {}, {"0", "1", "0"}),  algebraic("q4", {}, {"-1", "1", "0"}),
      algebraic("q5", {}, {"1", "0", "0"}),  algebraic("q_r", {1, 3, -4, 1}, {"-u^2+2*u", "u", "1"}),
  };
  return p;
}

const std::vector<AlgebraicPoint>& indeterminacy_mu8() {
  static const std::vector<AlgebraicPoint> p = {
      algebraic("(1:0:0)", {}, {"1", "0", "0"}),
      algebraic("(0:1:0)", {}, {"0", "1", "0"}),
      algebraic("(0:0:1)", {}, {"0", "0", "1"}),
      algebraic("(1:1:1)", {}, {"1", "1", "1"}),
      algebraic("(1:0:1)", {}, {"1", "0", "1"}),
      algebraic("(1:1:0)", {}, {"1", "1", "0"}),
      algebraic("(0:1:1)", {}, {"0", "1", "1"}),
      algebraic("sqrt2-", {-2, 0, 1}, {"-u+2", "-2*u+3", "1"}),
      algebraic("sqrt2+", {-2, 0, 1}, {"u+2", "2*u+3", "1"}),
  };
  return p;
}

const PlaneMapData& plane_map7() {
  static const PlaneMapData d = [] {
    PlaneMapData m;
    m.Q = z_poly(
        "z1^3*z2^2 + 2*z1^2*z2^3 + z1*z2^4 + 2*z1^3*z2*z3 + 4*z1^2*z2^2*z3 + 2*z1*z2^3*z3 + z1^3*z3^2"
        " - 4*z1^2*z2*z3^2 - 9*z1*z2^2*z3^2 - 4*z2^3*z3^2 - 2*z1^2*z3^3 + 2*z1*z2*z3^3 + 4*z2^2*z3^3 + z1*z3^4");
    m.Q1 = z_poly("z1") * m.Q;
    m.Q2 = z_poly(
        "-z1^5*z2 - 3*z1^4*z2^2 - 3*z1^3*z2^3 - z1^2*z2^4 + z1^4*z2*z3 + 2*z1^3*z2^2*z3 + z1^2*z2^3*z3"
        " + z1^3*z2*z3^2 + 2*z1^2*z2^2*z3^2 + z1*z2^3*z3^2 - z1^2*z2*z3^3 + z2^3*z3^3 - z2^2*z3^4");
    m.Q3 = z_poly(
        "2*z1^4*z2*z3 + 4*z1^3*z2^2*z3 + 2*z1^2*z2^3*z3 + z1^4*z3^2 - 4*z1^3*z2*z3^2 - 8*z1^2*z2^2*z3^2"
        " - 3*z1*z2^3*z3^2 - 2*z1^3*z3^3 + 2*z1^2*z2*z3^3 + 4*z1*z2^2*z3^3 + z2^3*z3^3 + z1^2*z3^4");
    m.R4 = z_poly("z1^4 + 2*z1^3*z2 + z1^2*z2^2 - z1^2*z3^2 - z1*z2*z3^2 - z2*z3^3");
    m.R7 = z_poly(
        "z1^6*z2 + 4*z1^5*z2^2 + 6*z1^4*z2^3 + 4*z1^3*z2^4 + z1^2*z2^5 + z1^6*z3 - 7*z1^4*z2^2*z3"
        " - 11*z1^3*z2^3*z3 - 6*z1^2*z2^4*z3 - z1*z2^5*z3 - z1^5*z3^2 + 3*z1^3*z2^2*z3^2 + 2*z1^2*z2^3*z3^2"
        " + 3*z1^2*z2^2*z3^3 + 5*z1*z2^3*z3^3 + 2*z2^4*z3^3 - 2*z1*z2^2*z3^4 - 2*z2^3*z3^4 - z1*z2*z3^5");
    m.R = z_poly("z2^2*(z1 - z3)^2/8") * m.R4 * m.R7;
    return m;
  }();
  return d;
}

const MPoly<Rational>& branch_conic8() {
  static const MPoly<Rational> c = z_poly("z1^2 - z2*z3");
  return c;
}

const MPoly<Rational>& branch_quartic8() {
  static const MPoly<Rational> q = z_poly(
      "z1^2*z2^2 + 2*z1^2*z2*z3 - 4*z1*z2^2*z3 - z2^3*z3 + z1^2*z3^2 - 4*z1*z2*z3^2 + 6*z2^2*z3^2 - z2*z3^3");
  return q;
}

std::array<Rational, 3> heptagon_witness() { return {Rational(-6), Rational(-25, 8), Rational(5)}; }
std::array<std::int64_t, 3> periodic_witness() { return {794, 582, 116}; }

const WeierstrassText& weierstrass_e7() {
  static const WeierstrassText w{"E7",
                                 {"t^4 - 2*t^3 + 3*t^2 + 6*t + 1", "8*t^3*(t^2 - t - 1)", "16*t^6"},
                                 {"(t+1)^2", "(t+1)^3", "(t+1)^4"}};
  return w;
}

const WeierstrassText& weierstrass_e8() {
  static const WeierstrassText w{"E8",
                                 {"4*t^4 - 8*t^3 + 4*t^2 + 1", "8*(t-1)^2", "16*(t-1)^4"},
                                 {"t^4", "t^6", "t^8"}};
  return w;
}

const std::vector<std::string>& cubic_vars() {
  static const std::vector<std::string> v{"X", "Y", "t"};
  return v;
}

const MPoly<Rational>& cubic_model8() {
  static const MPoly<Rational> c =
      parse_polynomial("(t-1)*X^2 - t^2*X*Y^2 + X*Y + (t-1)^2*X + (t-1)*Y", cubic_vars());
  return c;
}

}  // namespace linedyn::constants
