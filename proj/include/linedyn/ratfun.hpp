#pragma once

#include <string>
#include <utility>

#include "linedyn/errors.hpp"
#include "linedyn/field_descriptor.hpp"
#include "linedyn/upoly.hpp"

namespace linedyn {

class Rational;

template <class B>
class RatFun;

// K(t). Equality of instances is by base field and variable name.
template <class B>
struct RatFunField {
  using element_type = RatFun<B>;
  using base_field = typename B::field_type;

  base_field base;
  std::string var = "t";

  RatFun<B> zero() const { return from_base(base.zero()); }
  RatFun<B> one() const { return from_base(base.one()); }
  RatFun<B> from_int(std::int64_t v) const { return from_base(base.from_int(v)); }
  RatFun<B> from_rational(const Rational& q) const { return from_base(base.from_rational(q)); }
  RatFun<B> from_base(const B& b) const { return RatFun<B>(*this, UPoly<B>::constant(b), UPoly<B>::constant(base.one())); }
  RatFun<B> variable() const {
    return RatFun<B>(*this, UPoly<B>::monomial(base.one(), 1), UPoly<B>::constant(base.one()));
  }
  RatFun<B> from_poly(const UPoly<B>& p) const { return RatFun<B>(*this, p, UPoly<B>::constant(base.one())); }
  FieldDescriptor descriptor() const {
    FieldDescriptor d;
    d.kind = FieldDescriptor::Kind::RatFun;
    d.base = std::make_shared<FieldDescriptor>(base.descriptor());
    d.var = var;
    return d;
  }
  bool operator==(const RatFunField& o) const { return base == o.base && var == o.var; }
  bool operator!=(const RatFunField& o) const { return !(*this == o); }
};

// Reduced fraction num/den with den monic; reduced after every operation.
template <class B>
class RatFun {
 public:
  using field_type = RatFunField<B>;

  RatFun() = default;
  RatFun(field_type f, UPoly<B> num, UPoly<B> den) : f_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const field_type& field() const { return f_; }
  const UPoly<B>& num() const { return num_; }
  const UPoly<B>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  RatFun inv() const {
    if (is_zero()) throw NonInvertible("inverse of zero rational function");
    return RatFun(f_, den_, num_);
  }
  RatFun operator-() const { return RatFun(f_, -num_, den_, Reduced{}); }
  RatFun& operator+=(const RatFun& o) { return *this = add(o, false); }
  RatFun& operator-=(const RatFun& o) { return *this = add(o, true); }
  RatFun& operator*=(const RatFun& o) {
    check(o);
    // Cross-cancel first to keep intermediate degrees small.
    UPoly<B> g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    UPoly<B> n = quo(num_, g1) * quo(o.num_, g2);
    UPoly<B> d = quo(den_, g2) * quo(o.den_, g1);
    return *this = RatFun(f_, std::move(n), std::move(d));
  }
  RatFun& operator/=(const RatFun& o) { return *this *= o.inv(); }
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    a.check(b);
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  // Value at t = x; NonInvertible at a pole.
  B operator()(const B& x) const { return num_(x) / den_(x); }

  // Substitute t -> g.
  RatFun compose(const RatFun& g) const { return horner(num_, g) / horner(den_, g); }

  // Order of vanishing at the place given by an irreducible polynomial P.
  int valuation(const UPoly<B>& place) const {
    if (is_zero()) throw NonInvertible("valuation of zero");
    return factor_multiplicity(num_, place) - factor_multiplicity(den_, place);
  }
  int valuation_at(const B& r) const {
    if (is_zero()) throw NonInvertible("valuation of zero");
    return root_multiplicity(num_, r) - root_multiplicity(den_, r);
  }
  int valuation_at_infinity() const {
    if (is_zero()) throw NonInvertible("valuation of zero");
    return den_.degree() - num_.degree();
  }

  std::string to_string() const {
    if (den_.degree() == 0) return "(" + num_.to_string(f_.var) + ")";
    return "(" + num_.to_string(f_.var) + ")/(" + den_.to_string(f_.var) + ")";
  }

 private:
  struct Reduced {};
  RatFun(field_type f, UPoly<B> num, UPoly<B> den, Reduced) : f_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {}

  static UPoly<B> quo(const UPoly<B>& a, const UPoly<B>& b) { return divmod(a, b).first; }

  RatFun horner(const UPoly<B>& p, const RatFun& g) const {
    RatFun r = f_.zero();
    for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * g + f_.from_base(p.coeffs()[i]);
    return r;
  }

  RatFun add(const RatFun& o, bool negate) const {
    check(o);
    UPoly<B> on = negate ? -o.num_ : o.num_;
    if (den_ == o.den_) return RatFun(f_, num_ + on, den_);
    UPoly<B> g = gcd(den_, o.den_);
    UPoly<B> a = quo(den_, g), b = quo(o.den_, g);
    return RatFun(f_, num_ * b + on * a, a * o.den_);
  }

  void normalize() {
    if (den_.is_zero()) throw NonInvertible("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = UPoly<B>::constant(f_.base.one());
      return;
    }
    UPoly<B> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = quo(num_, g);
      den_ = quo(den_, g);
    }
    B l = den_.lc();
    if (!l.is_one()) {
      B li = l.inv();
      num_ = num_.scaled(li);
      den_ = den_.scaled(li);
    }
  }

  void check(const RatFun& o) const {
    if (!(f_ == o.f_)) throw FieldMismatch("different rational function fields");
  }

  field_type f_;
  UPoly<B> num_;
  UPoly<B> den_;
};

template <class B>
std::string to_string(const RatFun<B>& a) {
  return a.to_string();
}

}  // namespace linedyn
