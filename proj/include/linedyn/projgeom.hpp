#pragma once

#include <array>
#include <string>
#include <vector>

#include "linedyn/errors.hpp"
#include "linedyn/scalar_traits.hpp"

namespace linedyn {

template <class S>
using Vec3 = std::array<S, 3>;

template <class S>
Vec3<S> cross(const Vec3<S>& u, const Vec3<S>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}
template <class S>
S dot(const Vec3<S>& u, const Vec3<S>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}
template <class S>
S det3(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c) {
  return dot(a, cross(b, c));
}
template <class S, std::size_t N>
bool all_vanish(const std::array<S, N>& v) {
  for (const auto& c : v)
    if (!vanishes(c)) return false;
  return true;
}
// u ~ v: every 2x2 minor vanishes.
template <class S, std::size_t N>
bool proportional(const std::array<S, N>& u, const std::array<S, N>& v) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (!vanishes(u[i] * v[j] - u[j] * v[i])) return false;
  return true;
}
// Scale so the first non-vanishing coordinate is one.
template <class S, std::size_t N>
std::array<S, N> canonical(const std::array<S, N>& v) {
  for (std::size_t i = 0; i < N; ++i)
    if (!vanishes(v[i])) {
      S inv = v[i].inv();
      std::array<S, N> r = v;
      for (auto& c : r) c *= inv;
      return r;
    }
  throw DegenerateRealization("zero vector has no projective class");
}
template <class S, std::size_t N>
bool coords_less(const std::array<S, N>& a, const std::array<S, N>& b) {
  for (std::size_t i = 0; i < N; ++i) {
    if (scalar_less(a[i], b[i])) return true;
    if (scalar_less(b[i], a[i])) return false;
  }
  return false;
}

// A point of P^N-1 with projective equality. Construction rejects the zero
// vector; coordinates are kept as given (canonical() gives the normal form).
template <class S, std::size_t N>
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(std::array<S, N> c) : c_(std::move(c)) {
    if (all_vanish(c_)) throw DegenerateRealization("all coordinates vanish");
  }
  const std::array<S, N>& coords() const { return c_; }
  const S& operator[](std::size_t i) const { return c_[i]; }
  ProjPoint canonical() const { return ProjPoint(linedyn::canonical(c_), 0); }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return proportional(a.c_, b.c_); }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < N; ++i) s += (i ? ":" : "") + detail::scalar_str(c_[i]);
    return s + ")";
  }

 private:
  ProjPoint(std::array<S, N> c, int) : c_(std::move(c)) {}
  std::array<S, N> c_;
};

template <class S>
using ProjPoint2 = ProjPoint<S, 3>;
template <class S>
using ProjPoint3 = ProjPoint<S, 4>;

// Lines are stored as their normal vectors; same algebra as points.
template <class S>
class ProjLine2 : public ProjPoint<S, 3> {
 public:
  using ProjPoint<S, 3>::ProjPoint;
  ProjLine2() = default;
  ProjLine2(const ProjPoint<S, 3>& p) : ProjPoint<S, 3>(p) {}  // NOLINT(implicit)
  ProjLine2 canonical() const { return ProjLine2(ProjPoint<S, 3>::canonical()); }
  const Vec3<S>& normal() const { return this->coords(); }
};

template <class S>
bool incident(const ProjPoint2<S>& p, const ProjLine2<S>& l) {
  return vanishes(dot(p.coords(), l.normal()));
}

template <class S>
ProjPoint2<S> meet(const ProjLine2<S>& a, const ProjLine2<S>& b) {
  Vec3<S> c = cross(a.normal(), b.normal());
  if (all_vanish(c)) throw IdenticalLines("meet of identical lines " + a.to_string());
  return ProjPoint2<S>(c);
}

template <class S>
ProjLine2<S> join(const ProjPoint2<S>& a, const ProjPoint2<S>& b) {
  Vec3<S> c = cross(a.coords(), b.coords());
  if (all_vanish(c)) throw IdenticalLines("join of identical points " + a.to_string());
  return ProjLine2<S>(c);
}

template <class S>
struct Mat3 {
  std::array<std::array<S, 3>, 3> m;

  static Mat3 identity(const typename S::field_type& f) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = i == j ? f.one() : f.zero();
    return r;
  }
  static Mat3 from_columns(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      r.m[i][0] = a[i];
      r.m[i][1] = b[i];
      r.m[i][2] = c[i];
    }
    return r;
  }
  Vec3<S> column(int j) const { return {m[0][j], m[1][j], m[2][j]}; }
  Vec3<S> operator*(const Vec3<S>& v) const {
    return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2], m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
    return r;
  }
  S det() const { return det3(column(0), column(1), column(2)); }
  // Cofactor matrix: cof(M) = det(M) * M^{-T}; needs no division.
  Mat3 cofactor() const {
    Vec3<S> c0 = column(0), c1 = column(1), c2 = column(2);
    // Rows of M^{-1} * det are cross products of columns, so columns of cof are.
    Mat3 r = from_columns(cross(c1, c2), cross(c2, c0), cross(c0, c1));
    return r;
  }
  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }
  // Cramer's rule; NonInvertible when singular.
  Vec3<S> solve(const Vec3<S>& b) const {
    S d = det();
    if (vanishes(d)) throw NonInvertible("singular 3x3 system");
    S di = d.inv();
    Vec3<S> c0 = column(0), c1 = column(1), c2 = column(2);
    return {det3(b, c1, c2) * di, det3(c0, b, c2) * di, det3(c0, c1, b) * di};
  }
};

// Element of PGL3. `g` acts on points; lines transform by the cofactor
// matrix, which is g^{-T} up to the scalar det(g).
template <class S>
class ProjMap2 {
 public:
  ProjMap2() = default;
  explicit ProjMap2(Mat3<S> g) : g_(std::move(g)) {
    if (vanishes(g_.det())) throw NonInvertible("singular matrix is not a projective map");
  }
  static ProjMap2 identity(const typename S::field_type& f) { return ProjMap2(Mat3<S>::identity(f)); }

  const Mat3<S>& matrix() const { return g_; }
  ProjPoint2<S> apply(const ProjPoint2<S>& p) const { return ProjPoint2<S>(g_ * p.coords()); }
  ProjLine2<S> apply(const ProjLine2<S>& l) const { return ProjLine2<S>(g_.cofactor() * l.normal()); }
  ProjMap2 compose(const ProjMap2& h) const { return ProjMap2(g_ * h.g_); }  // this after h
  ProjMap2 inverse() const { return ProjMap2(g_.cofactor().transpose()); }
  bool is_identity() const {
    const auto& m = g_.m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i != j && !vanishes(m[i][j])) return false;
        if (i == j && !vanishes(m[i][i] - m[0][0])) return false;
      }
    return true;
  }
  friend bool operator==(const ProjMap2& a, const ProjMap2& b) {
    std::array<S, 9> x, y;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        x[3 * i + j] = a.g_.m[i][j];
        y[3 * i + j] = b.g_.m[i][j];
      }
    return proportional(x, y);
  }

 private:
  Mat3<S> g_;
};

namespace detail {
// Columns v0,v1,v2 rescaled so that they sum to v3.
template <class S>
Mat3<S> scaled_basis(const std::array<ProjLine2<S>, 4>& q) {
  Mat3<S> b = Mat3<S>::from_columns(q[0].normal(), q[1].normal(), q[2].normal());
  if (vanishes(b.det())) throw NonGenericFrame("first three lines of the frame are concurrent");
  Vec3<S> lam = b.solve(q[3].normal());
  for (const auto& l : lam)
    if (vanishes(l)) throw NonGenericFrame("fourth line passes through a vertex of the frame triangle");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.m[i][j] *= lam[j];
  return b;
}
}  // namespace detail

// The unique g with g(src_i) = dst_i. Works on normals: h = B_dst * B_src^{-1}
// sends src normals to dst normals, and the point map is h^{-T} ~ cof(h).
template <class S>
ProjMap2<S> frame_map(const std::array<ProjLine2<S>, 4>& src, const std::array<ProjLine2<S>, 4>& dst) {
  Mat3<S> a = detail::scaled_basis(src);
  Mat3<S> b = detail::scaled_basis(dst);
  Mat3<S> a_inv_det = a.cofactor().transpose();  // det(a) * a^{-1}
  Mat3<S> h = b * a_inv_det;
  return ProjMap2<S>(h.cofactor());
}

}  // namespace linedyn
