#pragma once

#include <string>

#include "linedyn/errors.hpp"
#include "linedyn/upoly.hpp"

namespace linedyn {

class Rational;
template <class B>
class Jet;

// K[e1,e2]/(e1,e2)^2.
template <class B>
struct JetRing {
  using element_type = Jet<B>;
  using base_field = typename B::field_type;

  base_field base;

  Jet<B> zero() const { return Jet<B>(base.zero(), base.zero(), base.zero()); }
  Jet<B> one() const { return Jet<B>(base.one(), base.zero(), base.zero()); }
  Jet<B> from_int(std::int64_t v) const { return Jet<B>(base.from_int(v), base.zero(), base.zero()); }
  Jet<B> from_rational(const Rational& q) const { return Jet<B>(base.from_rational(q), base.zero(), base.zero()); }
  Jet<B> from_base(const B& b) const { return Jet<B>(b, base.zero(), base.zero()); }
  // b + e_k, k in {1, 2}
  Jet<B> variable(const B& b, int k) const {
    return Jet<B>(b, k == 1 ? base.one() : base.zero(), k == 2 ? base.one() : base.zero());
  }
  bool operator==(const JetRing& o) const { return base == o.base; }
  bool operator!=(const JetRing& o) const { return !(base == o.base); }
};

template <class B>
class Jet {
 public:
  using field_type = JetRing<B>;

  Jet() = default;
  Jet(B c, B d1, B d2) : c_(std::move(c)), d1_(std::move(d1)), d2_(std::move(d2)) {}

  field_type field() const { return field_type{c_.field()}; }
  const B& c() const { return c_; }
  const B& d1() const { return d1_; }
  const B& d2() const { return d2_; }

  bool is_zero() const { return c_.is_zero() && d1_.is_zero() && d2_.is_zero(); }
  bool is_one() const { return c_.is_one() && d1_.is_zero() && d2_.is_zero(); }

  Jet inv() const {
    if (c_.is_zero()) throw NonInvertible("jet with vanishing constant part");
    B ci = c_.inv();
    B m = -(ci * ci);
    return Jet(ci, d1_ * m, d2_ * m);
  }
  Jet operator-() const { return Jet(-c_, -d1_, -d2_); }
  Jet& operator+=(const Jet& o) { c_ += o.c_; d1_ += o.d1_; d2_ += o.d2_; return *this; }
  Jet& operator-=(const Jet& o) { c_ -= o.c_; d1_ -= o.d1_; d2_ -= o.d2_; return *this; }
  Jet& operator*=(const Jet& o) {
    B nd1 = c_ * o.d1_ + o.c_ * d1_;
    B nd2 = c_ * o.d2_ + o.c_ * d2_;
    c_ *= o.c_;
    d1_ = std::move(nd1);
    d2_ = std::move(nd2);
    return *this;
  }
  Jet& operator/=(const Jet& o) { return *this *= o.inv(); }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_ && a.d1_ == b.d1_ && a.d2_ == b.d2_; }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

  std::string to_string() const {
    return detail::scalar_str(c_) + " + " + detail::scalar_str(d1_) + "*e1 + " + detail::scalar_str(d2_) + "*e2";
  }

 private:
  B c_, d1_, d2_;
};

template <class B>
std::string to_string(const Jet<B>& a) {
  return a.to_string();
}

}  // namespace linedyn
