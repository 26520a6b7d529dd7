#include "linedyn/families.hpp"

#include <set>

namespace linedyn {

namespace {
void check_budget(std::uint64_t p) {
  if (p < 3 || p > (1u << 14)) throw BudgetExceeded("surface enumeration needs 3 <= p <= 16384, got " + std::to_string(p));
  if (!is_probable_prime(p)) throw UnsupportedDegree(std::to_string(p) + " is not prime");
}
// The quadratic in y1 vanishes identically over z: the whole line through
// (1:0:0:0) and (0:z) lies on the surface.
bool fiber_is_line(int n, const Vec3<Fp>& z) {
  const auto f = z[0].field();
  const auto& q = constants::quartic(n);
  std::vector<Fp> pt{f.zero(), z[0], z[1], z[2]};
  for (int k = 0; k <= 2; ++k)
    if (!q.coefficient_in(0, k).evaluate<Fp>(pt, f).is_zero()) return false;
  return true;
}

}  // namespace

std::vector<ChartPoint<Fp>> enumerate_chart_points(int n, std::uint64_t p) {
  check_budget(p);
  PrimeField f(p);
  std::vector<ChartPoint<Fp>> out;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) {
      Vec3<Fp> z{f.from_uint(a), f.from_uint(b), f.one()};
      if (fiber_is_line(n, z)) {
        for (std::uint64_t c = 0; c < p; ++c) out.push_back({f.from_uint(c), z[0], z[1]});
        continue;
      }
      for (const auto& y1 : y1_roots(n, z)) out.push_back({y1, z[0], z[1]});
    }
  return out;
}

std::vector<ProjPoint3<Fp>> enumerate_surface_points(int n, std::uint64_t p) {
  check_budget(p);
  PrimeField f(p);
  std::vector<ProjPoint3<Fp>> out;
  for (const auto& x : enumerate_chart_points(n, p)) out.push_back(ProjPoint3<Fp>({x[0], x[1], x[2], f.one()}));
  // Plane y4 = 0: (y2:y3) ranges over P^1, and the whole y1-line over
  // (0:0:0) is the single point (1:0:0:0).
  std::vector<Vec3<Fp>> rest;
  for (std::uint64_t a = 0; a < p; ++a) rest.push_back({f.from_uint(a), f.one(), f.zero()});
  rest.push_back({f.one(), f.zero(), f.zero()});
  const auto& q = constants::quartic(n);
  for (const auto& z : rest) {
    if (fiber_is_line(n, z)) {
      for (std::uint64_t a = 0; a < p; ++a) out.push_back(ProjPoint3<Fp>({f.from_uint(a), z[0], z[1], z[2]}));
    } else {
      for (const auto& y1 : y1_roots(n, z)) out.push_back(ProjPoint3<Fp>({y1, z[0], z[1], z[2]}));
    }
  }
  // (1:0:0:0) itself sits over the zero vector of (y2:y3:y4).
  std::vector<Fp> s{f.one(), f.zero(), f.zero(), f.zero()};
  if (q.evaluate<Fp>(s, f).is_zero()) out.push_back(ProjPoint3<Fp>({f.one(), f.zero(), f.zero(), f.zero()}));
  // canonical form + dedup
  std::vector<ProjPoint3<Fp>> uniq;
  std::set<std::array<std::uint64_t, 4>> seen;
  for (const auto& y : out) {
    auto c = y.canonical();
    std::array<std::uint64_t, 4> key{c[0].value(), c[1].value(), c[2].value(), c[3].value()};
    if (seen.insert(key).second) uniq.push_back(c);
  }
  return uniq;
}

ChartPoint<Fp> random_chart_point(int n, const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f.p - 1);
  for (int tries = 0; tries < 100000; ++tries) {
    Vec3<Fp> z{f.from_uint(dist(rng)), f.from_uint(dist(rng)), f.one()};
    auto roots = y1_roots(n, z);
    if (roots.empty()) continue;
    return {roots[dist(rng) % roots.size()], z[0], z[1]};
  }
  throw BudgetExceeded("no surface point found");
}

ChartPoint<Fp> random_realizable_point(int n, const PrimeField& f, std::mt19937_64& rng, int resamples) {
  std::string last;
  for (int k = 0; k <= resamples; ++k) {
    ChartPoint<Fp> x = random_chart_point(n, f, rng);
    try {
      checked_realization(n, x);
      return x;
    } catch (const Error& e) {
      last = e.what();
    }
  }
  throw DegenerateRealization("no realizable point after " + std::to_string(resamples) + " resamples: " + last);
}

}  // namespace linedyn
