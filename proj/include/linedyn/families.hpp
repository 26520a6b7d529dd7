#pragma once

#include <array>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "linedyn/arrangements.hpp"
#include "linedyn/constants.hpp"
#include "linedyn/matroids.hpp"
#include "linedyn/prime_field.hpp"

namespace linedyn {

template <class S>
using ChartPoint = std::array<S, 3>;  // (x1, x2, x3) with y4 = 1

template <class S>
ProjPoint3<S> homogenize(const ChartPoint<S>& x, const typename S::field_type& f) {
  return ProjPoint3<S>({x[0], x[1], x[2], f.one()});
}

// Chart point of y, or DegenerateRealization when y4 = 0.
template <class S>
ChartPoint<S> dehomogenize(const ProjPoint3<S>& y) {
  if (vanishes(y[3])) throw DegenerateRealization("point " + y.to_string() + " is outside the chart y4 != 0");
  S i = y[3].inv();
  return {y[0] * i, y[1] * i, y[2] * i};
}

template <class S>
S surface_eval(int n, const ProjPoint3<S>& y) {
  const auto& c = y.coords();
  return constants::quartic(n).evaluate<S>({c[0], c[1], c[2], c[3]}, c[0].field());
}

template <class S>
S chart_eval(int n, const ChartPoint<S>& x) {
  const auto f = x[0].field();
  return constants::quartic(n).evaluate<S>({x[0], x[1], x[2], f.one()}, f);
}

// Gradient of the chart equation f(x1,x2,x3) = quartic(x1,x2,x3,1).
template <class S>
std::array<S, 3> chart_gradient(int n, const ChartPoint<S>& x) {
  const auto f = x[0].field();
  std::array<S, 3> g;
  for (int v = 0; v < 3; ++v) g[v] = constants::quartic(n).derivative(v).evaluate<S>({x[0], x[1], x[2], f.one()}, f);
  return g;
}

template <class S>
struct Realization {
  LabeledArrangement<S> c0, c1;
  LabeledArrangement<S> all() const { return c0.concat(c1); }
};

// Evaluate the family formulas at x. DegenerateRealization when a normal
// vanishes or two of the 2n lines coincide.
template <class S>
Realization<S> parametrized_realization(int n, const ChartPoint<S>& x) {
  const auto f = x[0].field();
  std::vector<S> pt{x[0], x[1], x[2]};
  auto eval_block = [&](const std::vector<constants::NormalFormula>& block, const char* tag) {
    std::vector<ProjLine2<S>> lines;
    int i = 0;
    for (const auto& row : block) {
      ++i;
      Vec3<S> v{row[0].evaluate<S>(pt, f), row[1].evaluate<S>(pt, f), row[2].evaluate<S>(pt, f)};
      if (all_vanish(v))
        throw DegenerateRealization(std::string("normal ") + tag + "[" + std::to_string(i) + "] vanishes");
      lines.emplace_back(v);
    }
    return LabeledArrangement<S>(std::move(lines));
  };
  Realization<S> r{eval_block(constants::family_c0(n), "C0"), eval_block(constants::family_c1(n), "C1")};
  if (r.all().has_duplicates()) throw DegenerateRealization("two lines of C0 u C1 coincide");
  return r;
}

inline const Rank3Matroid& matroid_M(int n) {
  static const Rank3Matroid m7 = matroid_M7();
  static const Rank3Matroid m8 = matroid_M8();
  if (n == 7) return m7;
  if (n == 8) return m8;
  throw UnsupportedDegree("matroid index must be 7 or 8");
}

// parametrized_realization plus the requirement M(C0 u C1) = M_n.
template <class S>
Realization<S> checked_realization(int n, const ChartPoint<S>& x) {
  Realization<S> r = parametrized_realization(n, x);
  Rank3Matroid m = matroid_from_arrangement(r.all());
  if (m != matroid_M(n)) {
    auto extra = m.difference(matroid_M(n));
    auto missing = matroid_M(n).difference(m);
    throw DegenerateRealization("matroid differs from M" + std::to_string(n) + " (" + std::to_string(extra.size()) +
                                " extra, " + std::to_string(missing.size()) + " missing non-bases)");
  }
  return r;
}

// Roots in y1 of the quartic restricted to (y1, z1, z2, z3), as y1 values.
// The quartic is quadratic in y1; a vanishing leading coefficient yields the
// linear root when there is one.
template <class S>
std::vector<S> y1_roots(int n, const Vec3<S>& z) {
  const auto f = z[0].field();
  const auto& q = constants::quartic(n);
  std::vector<S> pt{f.zero(), z[0], z[1], z[2]};
  S a = q.coefficient_in(0, 2).evaluate<S>(pt, f);
  S b = q.coefficient_in(0, 1).evaluate<S>(pt, f);
  S c = q.coefficient_in(0, 0).evaluate<S>(pt, f);
  if (vanishes(a)) {
    if (vanishes(b)) return {};
    return {-c / b};
  }
  S disc = b * b - f.from_int(4) * a * c;
  auto r = field_sqrt(disc);
  if (!r) return {};
  S den = (f.from_int(2) * a).inv();
  S r1 = (-b + *r) * den, r2 = (-b - *r) * den;
  if (r1 == r2) return {r1};
  return {r1, r2};
}

// All points of Z_n over F_p, with y4 = 1 first and then the plane y4 = 0,
// by solving the quadratic in y1 over every (y2:y3:y4). Canonical coordinates.
std::vector<ProjPoint3<Fp>> enumerate_surface_points(int n, std::uint64_t p);
// Affine part only (the chart y4 = 1).
std::vector<ChartPoint<Fp>> enumerate_chart_points(int n, std::uint64_t p);

// Random chart point of Z_n over F_p: random (x2, x3), solve for x1.
ChartPoint<Fp> random_chart_point(int n, const PrimeField& f, std::mt19937_64& rng);

// Random chart point whose realization satisfies the matroid check, with at
// most `resamples` extra draws (DegenerateRealization after that).
ChartPoint<Fp> random_realizable_point(int n, const PrimeField& f, std::mt19937_64& rng, int resamples = 5);

// Catalogued components of Z7 minus R7 containing y: "L1".."L12", "Co",
// "E_sample".
template <class S>
std::vector<std::string> excluded_locus_member(const ProjPoint3<S>& y) {
  const auto& c = y.coords();
  const auto f = c[0].field();
  std::vector<std::string> out;
  for (const auto& line : constants::lines_on_surface(7)) {
    bool on = true;
    for (const auto& form : line.forms) {
      S v = f.zero();
      for (int i = 0; i < 4; ++i) v += f.from_int(form[i]) * c[i];
      if (!vanishes(v)) on = false;
    }
    if (on) out.push_back(line.name);
  }
  for (const auto& curve : constants::excluded_curves_z7()) {
    bool on = true;
    for (const auto& e : curve.equations)
      if (!vanishes(e.evaluate<S>({c[0], c[1], c[2], c[3]}, f))) on = false;
    if (on) out.push_back(curve.name);
  }
  return out;
}

// sigma1 / sigma2 acting through the printed polynomial maps of P^3.
template <class S>
ProjPoint3<S> sigma_polynomial_action(int which, const ProjPoint3<S>& y) {
  const auto& c = y.coords();
  const auto f = c[0].field();
  std::array<S, 4> out;
  const auto& m = constants::sigma_action(which);
  for (int i = 0; i < 4; ++i) out[i] = m[i].evaluate<S>({c[0], c[1], c[2], c[3]}, f);
  if (all_vanish(out)) throw IndeterminacyPoint("sigma" + std::to_string(which) + " is undefined at " + y.to_string());
  return ProjPoint3<S>(out);
}

// The point of an AlgebraicPoint in the extension field it lives in, or in Q
// when it is rational.
template <class E>
std::vector<E> algebraic_coords(const constants::AlgebraicPoint& p, const typename E::field_type& ef, const E& u) {
  std::vector<E> out;
  for (const auto& c : p.coords) out.push_back(c.template evaluate<E>({u}, ef));
  return out;
}

}  // namespace linedyn
