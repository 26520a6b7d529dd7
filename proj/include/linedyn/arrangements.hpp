#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linedyn/projgeom.hpp"

namespace linedyn {

// Ordered list of lines; the order is the labeling.
template <class S>
class LabeledArrangement {
 public:
  LabeledArrangement() = default;
  explicit LabeledArrangement(std::vector<ProjLine2<S>> lines, std::vector<std::string> tags = {})
      : lines_(std::move(lines)), tags_(std::move(tags)) {}

  std::size_t size() const { return lines_.size(); }
  const ProjLine2<S>& operator[](std::size_t i) const { return lines_[i]; }
  const std::vector<ProjLine2<S>>& lines() const { return lines_; }
  const std::vector<std::string>& tags() const { return tags_; }

  std::array<ProjLine2<S>, 4> first_four() const { return {lines_[0], lines_[1], lines_[2], lines_[3]}; }

  LabeledArrangement concat(const LabeledArrangement& o) const {
    auto l = lines_;
    l.insert(l.end(), o.lines_.begin(), o.lines_.end());
    return LabeledArrangement(std::move(l));
  }
  LabeledArrangement slice(std::size_t from, std::size_t to) const {
    return LabeledArrangement(std::vector<ProjLine2<S>>(lines_.begin() + from, lines_.begin() + to));
  }
  LabeledArrangement without(std::size_t j) const {
    std::vector<ProjLine2<S>> l;
    for (std::size_t i = 0; i < lines_.size(); ++i)
      if (i != j) l.push_back(lines_[i]);
    return LabeledArrangement(std::move(l));
  }
  // Unlabeled view: canonical normals, sorted.
  std::vector<Vec3<S>> unlabeled() const {
    std::vector<Vec3<S>> v;
    for (const auto& l : lines_) v.push_back(canonical(l.normal()));
    std::sort(v.begin(), v.end(), coords_less<S, 3>);
    return v;
  }
  bool has_duplicates() const {
    for (std::size_t i = 0; i < lines_.size(); ++i)
      for (std::size_t j = i + 1; j < lines_.size(); ++j)
        if (lines_[i] == lines_[j]) return true;
    return false;
  }
  // Labelwise projective equality.
  friend bool operator==(const LabeledArrangement& a, const LabeledArrangement& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a.lines_[i] == b.lines_[i])) return false;
    return true;
  }

 private:
  std::vector<ProjLine2<S>> lines_;
  std::vector<std::string> tags_;
};

template <class S>
LabeledArrangement<S> apply(const ProjMap2<S>& g, const LabeledArrangement<S>& c) {
  std::vector<ProjLine2<S>> out;
  out.reserve(c.size());
  for (const auto& l : c.lines()) out.push_back(g.apply(l));
  return LabeledArrangement<S>(std::move(out), c.tags());
}

template <class S>
struct SingularPoint {
  ProjPoint2<S> point;       // canonical coordinates
  std::vector<int> lines;    // sorted 0-based indices
  int multiplicity() const { return static_cast<int>(lines.size()); }
};

template <class S>
class SingularPointTable {
 public:
  SingularPointTable() = default;
  explicit SingularPointTable(std::vector<SingularPoint<S>> pts) : pts_(std::move(pts)) {}

  const std::vector<SingularPoint<S>>& points() const { return pts_; }
  // multiplicity k -> t_k
  std::map<int, int> t_vector() const {
    std::map<int, int> t;
    for (const auto& p : pts_) t[p.multiplicity()]++;
    return t;
  }
  int t(int k) const {
    auto tv = t_vector();
    auto it = tv.find(k);
    return it == tv.end() ? 0 : it->second;
  }
  std::vector<ProjPoint2<S>> points_with_multiplicity(const std::set<int>& ks) const {
    std::vector<ProjPoint2<S>> out;
    for (const auto& p : pts_)
      if (ks.count(p.multiplicity())) out.push_back(p.point);
    return out;
  }

 private:
  std::vector<SingularPoint<S>> pts_;
};

// Complete intersection table. Points are grouped by projective equality of
// the pairwise meets; deterministic order by canonical coordinates.
template <class S>
SingularPointTable<S> singular_points(const LabeledArrangement<S>& c) {
  const std::size_t n = c.size();
  std::vector<SingularPoint<S>> pts;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec3<S> x = cross(c[i].normal(), c[j].normal());
      if (all_vanish(x)) throw DuplicateLines("lines " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      ProjPoint2<S> p(canonical(x));
      auto it = std::find_if(pts.begin(), pts.end(), [&](const SingularPoint<S>& q) { return q.point == p; });
      if (it == pts.end()) {
        pts.push_back({p, {static_cast<int>(i), static_cast<int>(j)}});
      } else {
        for (int k : {static_cast<int>(i), static_cast<int>(j)})
          if (std::find(it->lines.begin(), it->lines.end(), k) == it->lines.end()) it->lines.push_back(k);
      }
    }
  for (auto& p : pts) std::sort(p.lines.begin(), p.lines.end());
  std::sort(pts.begin(), pts.end(),
            [](const SingularPoint<S>& a, const SingularPoint<S>& b) { return coords_less(a.point.coords(), b.point.coords()); });
  return SingularPointTable<S>(std::move(pts));
}

// L_m: all lines through exactly m (m in m_set) of the given points. Candidate
// lines come from point pairs, deduplicated, then incidence-counted.
template <class S>
std::vector<ProjLine2<S>> lines_through_exactly(const std::vector<ProjPoint2<S>>& pts, const std::set<int>& m_set) {
  std::vector<Vec3<S>> cands;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      Vec3<S> l = cross(pts[a].coords(), pts[b].coords());
      if (all_vanish(l)) continue;
      Vec3<S> lc = canonical(l);
      bool seen = false;
      for (const auto& c : cands)
        if (proportional(c, lc)) {
          seen = true;
          break;
        }
      if (!seen) cands.push_back(lc);
    }
  std::vector<Vec3<S>> keep;
  for (const auto& l : cands) {
    int cnt = 0;
    for (const auto& p : pts)
      if (vanishes(dot(l, p.coords()))) ++cnt;
    if (m_set.count(cnt)) keep.push_back(l);
  }
  std::sort(keep.begin(), keep.end(), coords_less<S, 3>);
  std::vector<ProjLine2<S>> out;
  for (auto& l : keep) out.emplace_back(l);
  return out;
}

// Lambda_{n,m}(C) = L_m(P_n(C)), unlabeled.
template <class S>
LabeledArrangement<S> lambda_operator(const LabeledArrangement<S>& c, const std::set<int>& n_set, const std::set<int>& m_set) {
  auto table = singular_points(c);
  return LabeledArrangement<S>(lines_through_exactly(table.points_with_multiplicity(n_set), m_set));
}

// n = 7: l'_j is the unique line through exactly three double points of the
// hexagon C minus line j.
template <class S>
LabeledArrangement<S> labeled_lambda7(const LabeledArrangement<S>& c) {
  if (c.size() != 7) throw DegenerateOperator("labeled_lambda7 needs 7 lines");
  std::vector<ProjLine2<S>> out;
  for (std::size_t j = 0; j < 7; ++j) {
    auto l = lambda_operator(c.without(j), {2}, {3});
    if (l.size() != 1)
      throw DegenerateOperator("hexagon " + std::to_string(j + 1) + " has " + std::to_string(l.size()) + " lines through exactly 3 double points");
    out.push_back(l[0]);
  }
  return LabeledArrangement<S>(std::move(out));
}

// Fixed partition of the 28 pairs {i,j} of an 8-line arrangement into S_1..S_8.
inline const std::array<std::vector<std::pair<int, int>>, 8>& octagon_partition() {
  static const std::array<std::vector<std::pair<int, int>>, 8> s = {{
      {{1, 8}, {2, 7}, {3, 6}, {4, 5}},
      {{1, 7}, {2, 6}, {3, 5}},
      {{1, 6}, {2, 5}, {3, 4}, {7, 8}},
      {{1, 5}, {2, 4}, {6, 8}},
      {{1, 4}, {2, 3}, {5, 8}, {6, 7}},
      {{1, 3}, {4, 8}, {5, 7}},
      {{1, 2}, {3, 8}, {4, 7}, {5, 6}},
      {{2, 8}, {3, 7}, {4, 6}},
  }};
  return s;
}

// n = 8: l'_k is the line through all p_{i,j}, {i,j} in S_k.
template <class S>
LabeledArrangement<S> labeled_lambda8(const LabeledArrangement<S>& c) {
  if (c.size() != 8) throw DegenerateOperator("labeled_lambda8 needs 8 lines");
  std::vector<ProjLine2<S>> out;
  int k = 0;
  for (const auto& part : octagon_partition()) {
    ++k;
    std::vector<Vec3<S>> pts;
    for (auto [i, j] : part) {
      Vec3<S> p = cross(c[i - 1].normal(), c[j - 1].normal());
      if (all_vanish(p)) throw DegenerateOperator("lines " + std::to_string(i) + "," + std::to_string(j) + " coincide");
      pts.push_back(p);
    }
    Vec3<S> l = cross(pts[0], pts[1]);
    if (all_vanish(l)) throw DegenerateOperator("S_" + std::to_string(k) + " has coincident points; line not unique");
    for (const auto& p : pts)
      if (!vanishes(dot(l, p))) throw DegenerateOperator("points of S_" + std::to_string(k) + " are not collinear");
    out.emplace_back(l);
  }
  return LabeledArrangement<S>(std::move(out));
}

// g with g(A_i) = B_i for all i, or nullopt.
template <class S>
std::optional<ProjMap2<S>> proj_equivalent(const LabeledArrangement<S>& a, const LabeledArrangement<S>& b) {
  if (a.size() != b.size() || a.size() < 4) throw NonGenericFrame("proj_equivalent needs equal lengths >= 4");
  ProjMap2<S> g;
  try {
    g = frame_map(a.first_four(), b.first_four());
  } catch (const NonGenericFrame&) {
    // a's frame is checked by the caller's precondition; b degenerate means
    // no projective map can exist.
    detail::scaled_basis(a.first_four());
    return std::nullopt;
  }
  for (std::size_t i = 4; i < a.size(); ++i)
    if (!(g.apply(a[i]) == b[i])) return std::nullopt;
  return g;
}

}  // namespace linedyn
