#include "linedyn/dynamics.hpp"

#include <algorithm>

namespace linedyn {

namespace {
using Key = std::array<std::uint64_t, 3>;
Key key_of(const ChartPoint<Fp>& x) { return {x[0].value(), x[1].value(), x[2].value()}; }
}  // namespace

OrbitRecord orbit(int n, const ChartPoint<Fp>& x, int max_iter) {
  OrbitRecord rec;
  rec.points.push_back(x);
  std::map<Key, int> index{{key_of(x), 0}};
  for (int k = 1; k <= max_iter; ++k) {
    ChartPoint<Fp> y;
    try {
      y = lambda_step(n, rec.points.back());
    } catch (const Error& e) {
      rec.termination = std::string("degenerate: ") + e.kind() + ": " + e.what();
      return rec;
    }
    auto it = index.find(key_of(y));
    if (it != index.end()) {
      rec.preperiod = it->second;
      rec.cycle_length = k - it->second;
      if (it->second == 0) {
        rec.period = k;
        rec.termination = "period";
      } else {
        rec.termination = "cycle";
      }
      return rec;
    }
    index.emplace(key_of(y), k);
    rec.points.push_back(y);
  }
  rec.termination = "budget";
  return rec;
}

std::size_t DegreeHistogram::modal_fiber_size() const {
  std::size_t best = 0, count = 0;
  for (auto [size, c] : fibers)
    if (c > count) {
      best = size;
      count = c;
    }
  return best;
}

std::size_t DegreeHistogram::max_fiber_size() const { return fibers.empty() ? 0 : fibers.rbegin()->first; }

DegreeHistogram degree_estimate(int n, std::uint64_t p) {
  if (p > 1024) throw BudgetExceeded("degree scans are limited to p <= 1024");
  DegreeHistogram h;
  h.p = p;
  std::map<Key, std::size_t> images;
  for (const auto& x : enumerate_chart_points(n, p)) {
    try {
      ChartPoint<Fp> y = lambda_step(n, x);
      images[key_of(y)]++;
      h.domain_points++;
    } catch (const Error&) {
      h.undefined_points++;
    }
  }
  for (const auto& [k, c] : images) h.fibers[c]++;
  return h;
}

std::map<std::string, std::size_t> orbit_length_scan(int n, std::uint64_t p, int max_iter) {
  std::map<std::string, std::size_t> out;
  for (const auto& x : enumerate_chart_points(n, p)) {
    OrbitRecord r = orbit(n, x, max_iter);
    std::string key;
    if (r.cycle_length)
      key = "cycle " + std::to_string(*r.cycle_length);
    else if (r.termination == "budget")
      key = "budget";
    else
      key = "degenerate";
    out[key]++;
  }
  return out;
}

}  // namespace linedyn
