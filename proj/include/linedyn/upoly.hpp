#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "linedyn/errors.hpp"

namespace linedyn {

namespace detail {
template <class T>
std::string scalar_str(const T& v) {
  return to_string(v);
}
}  // namespace detail

// Dense univariate polynomial, coefficients stored constant term first with no
// trailing zeros (the zero polynomial has no coefficients). The coefficient
// field is carried by the coefficients themselves, so a UPoly never needs to
// know it except when building constants.
template <class S>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const S& c) { return UPoly(std::vector<S>{c}); }
  // c * X^k
  static UPoly monomial(const S& c, std::size_t k) {
    std::vector<S> v(k + 1, c.field().zero());
    v[k] = c;
    return UPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<S>& coeffs() const { return c_; }
  const S& lc() const { return c_.back(); }
  // Coefficient of X^k, with `zero` returned past the end.
  S coeff(std::size_t k, const S& zero) const { return k < c_.size() ? c_[k] : zero; }

  S operator()(const S& x) const {
    if (c_.empty()) return x.field().zero();
    S r = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) r = r * x + c_[i];
    return r;
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), o.c_[0].field().zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) { return *this += -o; }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, a.c_[0].field().zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const S& s) const {
    if (s.is_zero()) return {};
    UPoly r = *this;
    for (auto& a : r.c_) a *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly monic() const {
    if (is_zero()) return {};
    return scaled(lc().inv());
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.push_back(c_[i] * c_[i].field().from_int(static_cast<std::int64_t>(i)));
    return UPoly(std::move(r));
  }

  UPoly pow(unsigned e) const {
    UPoly base = *this;
    UPoly r = constant(one_like());
    while (e) {
      if (e & 1u) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  // Substitute another polynomial for X.
  UPoly compose(const UPoly& g) const {
    UPoly r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(c_[i]);
    return r;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      std::string cs = detail::scalar_str(c_[i]);
      if (!out.empty()) out += " + ";
      out += "(" + cs + ")";
      if (i >= 1) out += "*" + var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  S one_like() const {
    if (c_.empty()) throw NonInvertible("UPoly::pow of zero polynomial needs a field");
    return c_[0].field().one();
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<S> c_;
};

// Euclidean division a = q*b + r with deg r < deg b.
template <class S>
std::pair<UPoly<S>, UPoly<S>> divmod(const UPoly<S>& a, const UPoly<S>& b) {
  if (b.is_zero()) throw NonInvertible("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<S>(), a};
  std::vector<S> r = a.coeffs();
  const auto& bc = b.coeffs();
  S zero = bc[0].field().zero();
  S lead_inv = b.lc().inv();
  std::size_t db = bc.size() - 1;
  std::vector<S> q(r.size() - db, zero);
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    S f = r[i] * lead_inv;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * bc[j];
  }
  r.resize(db, zero);
  return {UPoly<S>(std::move(q)), UPoly<S>(std::move(r))};
}

template <class S>
UPoly<S> operator%(const UPoly<S>& a, const UPoly<S>& b) { return divmod(a, b).second; }

// Monic gcd; gcd(0,0) = 0.
template <class S>
UPoly<S> gcd(UPoly<S> a, UPoly<S> b) {
  while (!b.is_zero()) {
    UPoly<S> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class S>
struct ExtendedGcd {
  UPoly<S> g, s, t;
};

template <class S>
ExtendedGcd<S> extended_gcd(const UPoly<S>& a, const UPoly<S>& b, const S& one) {
  UPoly<S> r0 = a, r1 = b;
  UPoly<S> s0 = UPoly<S>::constant(one), s1;
  UPoly<S> t0, t1 = UPoly<S>::constant(one);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<S> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly<S> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  S li = r0.lc().inv();
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

// Largest k with (X - r)^k | f; f must be nonzero.
template <class S>
int root_multiplicity(UPoly<S> f, const S& r) {
  if (f.is_zero()) throw NonInvertible("multiplicity of a root of the zero polynomial");
  UPoly<S> lin(std::vector<S>{-r, r.field().one()});
  int k = 0;
  for (;;) {
    auto [q, rem] = divmod(f, lin);
    if (!rem.is_zero()) return k;
    f = std::move(q);
    ++k;
  }
}

// Largest k with g^k | f, for nonconstant g.
template <class S>
int factor_multiplicity(UPoly<S> f, const UPoly<S>& g) {
  if (f.is_zero() || g.degree() < 1) throw NonInvertible("factor multiplicity needs f != 0, deg g >= 1");
  int k = 0;
  for (;;) {
    auto [q, rem] = divmod(f, g);
    if (!rem.is_zero()) return k;
    f = std::move(q);
    ++k;
  }
}

// Order at infinity of a polynomial that "should" have degree expected_degree,
// i.e. the degree defect.
template <class S>
int multiplicity_at_infinity(const UPoly<S>& f, int expected_degree) {
  return expected_degree - f.degree();
}

}  // namespace linedyn
