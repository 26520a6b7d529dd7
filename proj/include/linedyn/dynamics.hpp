#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linedyn/families.hpp"
#include "linedyn/jet.hpp"

namespace linedyn {

template <class S>
std::array<ProjLine2<S>, 4> frame_lines(int n, const typename S::field_type& f) {
  auto fr = constants::frame_normals(n);
  std::array<ProjLine2<S>, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = ProjLine2<S>(Vec3<S>{embed<S>(fr[i][0], f), embed<S>(fr[i][1], f), embed<S>(fr[i][2], f)});
  return out;
}

// n = 7 period map on the C0-part (7 lines). After moving the first four
// lines onto the frame, p57 = (1:x2:x3) and p17 = (0:u:v) with
//   u (x2 x3 + x3^2 - x3) = v (-x1 x2^2 - x1 x2 x3 + x1 x2 + x2^2 - x2),
// which is linear in x1.
template <class S>
ChartPoint<S> period_map7(const LabeledArrangement<S>& c) {
  if (c.size() < 7) throw DegenerateOperator("period map needs 7 lines");
  const auto f = c[0].normal()[0].field();
  ProjMap2<S> g = frame_map(c.first_four(), frame_lines<S>(7, f));
  auto l = [&](int i) { return g.apply(c[i - 1]).normal(); };
  Vec3<S> p57 = cross(l(5), l(7));
  if (vanishes(p57[0])) throw LinearSolveDegenerate("p57 lies at infinity");
  S i0 = p57[0].inv();
  S x2 = p57[1] * i0, x3 = p57[2] * i0;
  Vec3<S> p17 = cross(l(1), l(7));
  const S& u = p17[1];
  const S& v = p17[2];
  S c1 = -x2 * x2 - x2 * x3 + x2;
  S c0 = x2 * x2 - x2;
  S b = x2 * x3 + x3 * x3 - x3;
  S den = v * c1;
  if (vanishes(den)) throw LinearSolveDegenerate("coefficient of x1 vanishes in the p17 relation");
  return {(u * b - v * c0) / den, x2, x3};
}

// n = 8 period map: frame on the first four lines of c0, then read
// (1:x1:0) and (1:x2:x3) from the last two lines of c1.
template <class S>
ChartPoint<S> period_map8(const LabeledArrangement<S>& c0, const LabeledArrangement<S>& c1) {
  if (c0.size() < 4 || c1.size() != 8) throw DegenerateOperator("period map needs 8 + 8 lines");
  const auto f = c0[0].normal()[0].field();
  ProjMap2<S> g = frame_map(c0.first_four(), frame_lines<S>(8, f));
  Vec3<S> a = g.apply(c1[6]).normal();
  Vec3<S> b = g.apply(c1[7]).normal();
  if (vanishes(a[0]) || vanishes(b[0])) throw LinearSolveDegenerate("last normals have vanishing first coordinate");
  if (!vanishes(a[2])) throw LinearSolveDegenerate("seventh normal of C1 is not of the form (1:x1:0)");
  S ia = a[0].inv(), ib = b[0].inv();
  return {a[1] * ia, b[1] * ib, b[2] * ib};
}

// Period map of a realization, n = 7 using the first block only.
template <class S>
ChartPoint<S> period_map(int n, const LabeledArrangement<S>& a) {
  if (n == 7) {
    if (a.size() != 7 && a.size() != 14) throw DegenerateOperator("n = 7 period map expects 7 or 14 lines");
    return period_map7(a.slice(0, 7));
  }
  if (n == 8) {
    if (a.size() != 16) throw DegenerateOperator("n = 8 period map expects 16 lines");
    return period_map8(a.slice(0, 8), a.slice(8, 16));
  }
  throw UnsupportedDegree("n must be 7 or 8");
}

template <class S>
LabeledArrangement<S> labeled_lambda(int n, const LabeledArrangement<S>& c) {
  return n == 7 ? labeled_lambda7(c) : labeled_lambda8(c);
}

// One step of lambda. The input must give a realization of M_n; the output
// comes from the frame-normalized (C1, C2).
template <class S>
ChartPoint<S> lambda_step(int n, const ChartPoint<S>& x) {
  Realization<S> r = checked_realization(n, x);
  LabeledArrangement<S> c2 = labeled_lambda(n, r.c1);
  if (n == 7) return period_map7(r.c1);
  return period_map8(r.c1, c2);
}

// Permute the 2n lines (A'_i = A_{s(i)}) and apply the period map.
template <class S>
ChartPoint<S> aut_action(int n, const Permutation& s, const ChartPoint<S>& x) {
  Realization<S> r = checked_realization(n, x);
  LabeledArrangement<S> a = r.all();
  if (s.size() != static_cast<int>(a.size())) throw UnsupportedDegree("permutation degree does not match 2n");
  std::vector<ProjLine2<S>> l;
  for (int i = 1; i <= s.size(); ++i) l.push_back(a[s(i) - 1]);
  return period_map(n, LabeledArrangement<S>(std::move(l)));
}

// Fibration parameter t = (y2 - y4) / y3 on the chart.
template <class S>
S fibration_parameter(const ChartPoint<S>& x) {
  if (vanishes(x[2])) throw IndeterminacyPoint("t is undefined where x3 = 0");
  const auto f = x[0].field();
  return (x[1] - f.one()) / x[2];
}

// t(sigma0(lambda(x))) == t(x)
template <class S>
bool sigma0_base_check(const ChartPoint<S>& x) {
  ChartPoint<S> y = aut_action(7, sigma0(), lambda_step(7, x));
  return fibration_parameter(y) == fibration_parameter(x);
}

template <class S>
bool chart_equal(const ChartPoint<S>& a, const ChartPoint<S>& b) {
  return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

struct OrbitRecord {
  std::vector<ChartPoint<Fp>> points;  // points[0] is the start
  std::optional<int> period;           // smallest k > 0 with x_k = x_0
  std::optional<int> preperiod;        // first index of the eventual cycle, if found
  std::optional<int> cycle_length;
  std::string termination;             // "period", "cycle", "degenerate: ...", "budget"
};

OrbitRecord orbit(int n, const ChartPoint<Fp>& x, int max_iter);

// Period of the labeled arrangement sequence C0 -> C1 -> C2 -> ... under the
// labeled operator, comparing C_k with C0 labelwise; nullopt if none within
// max_iter or the sequence degenerates.
template <class S>
std::optional<int> arrangement_period(int n, const ChartPoint<S>& x, int max_iter) {
  Realization<S> r = checked_realization(n, x);
  LabeledArrangement<S> cur = r.c1;
  for (int k = 1; k <= max_iter; ++k) {
    if (cur == r.c0) return k;
    try {
      cur = labeled_lambda(n, cur);
    } catch (const DegenerateOperator&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

struct DegreeHistogram {
  std::uint64_t p = 0;
  std::size_t domain_points = 0;       // chart points where lambda is defined
  std::size_t undefined_points = 0;    // chart points outside the domain
  std::map<std::size_t, std::size_t> fibers;  // fiber size -> number of images
  std::size_t modal_fiber_size() const;
  std::size_t max_fiber_size() const;
};

DegreeHistogram degree_estimate(int n, std::uint64_t p);

// Orbit-length statistics for the CLI scan: cycle length -> count of starts.
std::map<std::string, std::size_t> orbit_length_scan(int n, std::uint64_t p, int max_iter);

// Pullback factor of omega = dx_a ^ dx_b / f_k under a chart map, computed in
// 2-jet arithmetic; (a, b, k) is the cyclic triple starting after `implicit`.
template <class Map>
Fp form_multiplier_of(int n, const ChartPoint<Fp>& x, Map&& map, int implicit = 0) {
  const PrimeField f = x[0].field();
  const int k = implicit, a = (implicit + 1) % 3, b = (implicit + 2) % 3;
  auto grad = chart_gradient(n, x);
  if (grad[k].is_zero()) throw ChartSingular("df/dx" + std::to_string(k + 1) + " vanishes at the source point");
  Fp ik = grad[k].inv();
  ChartPoint<Jet<Fp>> xj;
  xj[a] = Jet<Fp>(x[a], f.one(), f.zero());
  xj[b] = Jet<Fp>(x[b], f.zero(), f.one());
  xj[k] = Jet<Fp>(x[k], -grad[a] * ik, -grad[b] * ik);
  ChartPoint<Jet<Fp>> yj = map(xj);
  ChartPoint<Fp> y{yj[0].c(), yj[1].c(), yj[2].c()};
  auto grad_y = chart_gradient(n, y);
  if (grad_y[k].is_zero()) throw ChartSingular("df/dx" + std::to_string(k + 1) + " vanishes at the image point");
  Fp det = yj[a].d1() * yj[b].d2() - yj[a].d2() * yj[b].d1();
  return det * grad[k] / grad_y[k];
}

inline Fp form_multiplier(int n, const ChartPoint<Fp>& x, int implicit = 0) {
  return form_multiplier_of(
      n, x, [n](const ChartPoint<Jet<Fp>>& xj) { return lambda_step(n, xj); }, implicit);
}

}  // namespace linedyn
