#pragma once

#include <memory>
#include <string>
#include <vector>

#include "linedyn/errors.hpp"
#include "linedyn/field_descriptor.hpp"
#include "linedyn/upoly.hpp"

namespace linedyn {

class Rational;

template <class B>
class Ext;

template <class B>
struct ExtModulus {
  typename B::field_type base;
  UPoly<B> minpoly;  // monic
};

// K[u]/(m(u)) for monic m of degree 2..4.
template <class B>
struct ExtensionField {
  using element_type = Ext<B>;
  using base_field = typename B::field_type;

  std::shared_ptr<const ExtModulus<B>> mod;

  int degree() const { return mod->minpoly.degree(); }
  const base_field& base() const { return mod->base; }
  const UPoly<B>& minpoly() const { return mod->minpoly; }

  Ext<B> zero() const { return from_base(mod->base.zero()); }
  Ext<B> one() const { return from_base(mod->base.one()); }
  Ext<B> from_int(std::int64_t v) const { return from_base(mod->base.from_int(v)); }
  Ext<B> from_rational(const Rational& q) const { return from_base(mod->base.from_rational(q)); }
  Ext<B> from_base(const B& b) const {
    std::vector<B> c(degree(), mod->base.zero());
    c[0] = b;
    return Ext<B>(mod, std::move(c));
  }
  // The class of u.
  Ext<B> generator() const {
    std::vector<B> c(degree(), mod->base.zero());
    c[1] = mod->base.one();
    return Ext<B>(mod, std::move(c));
  }
  FieldDescriptor descriptor() const {
    FieldDescriptor d;
    d.kind = FieldDescriptor::Kind::Ext;
    d.base = std::make_shared<FieldDescriptor>(mod->base.descriptor());
    for (const auto& c : mod->minpoly.coeffs()) d.minpoly.push_back(to_string(c));
    return d;
  }
  bool operator==(const ExtensionField& o) const {
    return mod == o.mod || (mod->base == o.mod->base && mod->minpoly == o.mod->minpoly);
  }
  bool operator!=(const ExtensionField& o) const { return !(*this == o); }
};

template <class B>
class Ext {
 public:
  using field_type = ExtensionField<B>;

  Ext() = default;
  Ext(std::shared_ptr<const ExtModulus<B>> mod, std::vector<B> c) : mod_(std::move(mod)), c_(std::move(c)) {}

  field_type field() const { return field_type{mod_}; }
  const std::vector<B>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& a : c_)
      if (!a.is_zero()) return false;
    return true;
  }
  bool is_one() const { return *this == field().one(); }

  Ext operator-() const {
    Ext r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  Ext& operator+=(const Ext& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Ext& operator-=(const Ext& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Ext& operator*=(const Ext& o) {
    check(o);
    UPoly<B> prod = as_poly() * o.as_poly();
    *this = from_poly(prod % mod_->minpoly);
    return *this;
  }
  Ext& operator/=(const Ext& o) { return *this *= o.inv(); }
  friend Ext operator+(Ext a, const Ext& b) { return a += b; }
  friend Ext operator-(Ext a, const Ext& b) { return a -= b; }
  friend Ext operator*(Ext a, const Ext& b) { return a *= b; }
  friend Ext operator/(Ext a, const Ext& b) { return a /= b; }
  friend bool operator==(const Ext& a, const Ext& b) {
    a.check(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Ext& a, const Ext& b) { return !(a == b); }

  // Extended Euclid against the modulus; a nontrivial gcd means either a = 0
  // or the modulus was reducible.
  Ext inv() const {
    if (is_zero()) throw NonInvertible("inverse of zero in extension field");
    auto eg = extended_gcd(as_poly(), mod_->minpoly, mod_->base.one());
    if (eg.g.degree() != 0) throw NonInvertible("extension modulus is reducible: zero divisor found");
    return from_poly(eg.s % mod_->minpoly);
  }

  UPoly<B> as_poly() const { return UPoly<B>(c_); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += detail::scalar_str(c_[i]);
      if (i >= 1) out += "*u";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  Ext from_poly(const UPoly<B>& p) const {
    std::vector<B> c(mod_->minpoly.degree(), mod_->base.zero());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i] = p.coeffs()[i];
    return Ext(mod_, std::move(c));
  }
  void check(const Ext& o) const {
    if (mod_ != o.mod_ && !(field() == o.field())) throw FieldMismatch("different extension fields");
  }
  std::shared_ptr<const ExtModulus<B>> mod_;
  std::vector<B> c_;
};

template <class B>
std::string to_string(const Ext<B>& a) {
  return a.to_string();
}

// minpoly given constant term first; must be monic of degree 2..4 with a
// nonzero constant term.
template <class F>
ExtensionField<typename F::element_type> adjoin_root(const F& base,
                                                     const std::vector<typename F::element_type>& minpoly) {
  using B = typename F::element_type;
  UPoly<B> m(minpoly);
  if (m.degree() < 2 || m.degree() > 4) throw UnsupportedDegree("extension degree must be 2..4");
  if (!m.lc().is_one()) throw UnsupportedDegree("minimal polynomial must be monic");
  if (m.coeffs()[0].is_zero()) throw UnsupportedDegree("minimal polynomial must have nonzero constant term");
  auto mod = std::make_shared<ExtModulus<B>>(ExtModulus<B>{base, std::move(m)});
  return ExtensionField<B>{std::move(mod)};
}

}  // namespace linedyn
