#pragma once

#include <optional>
#include <string>
#include <type_traits>

#include "linedyn/extension.hpp"
#include "linedyn/jet.hpp"
#include "linedyn/prime_field.hpp"
#include "linedyn/rational.hpp"
#include "linedyn/ratfun.hpp"

namespace linedyn {

// "Zero at the base point". For fields this is plain is_zero; for jets it
// looks only at the constant part, which is what incidence and multiplicity
// decisions need when the arrangement pipeline runs in jet arithmetic.
template <class S>
bool vanishes(const S& x) {
  return x.is_zero();
}
template <class B>
bool vanishes(const Jet<B>& x) {
  return vanishes(x.c());
}

// Total order used only to make outputs deterministic.
inline bool scalar_less(const Rational& a, const Rational& b) { return a < b; }
inline bool scalar_less(const Fp& a, const Fp& b) { return a.value() < b.value(); }
template <class B>
bool scalar_less(const Ext<B>& a, const Ext<B>& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (scalar_less(x[i], y[i])) return true;
    if (scalar_less(y[i], x[i])) return false;
  }
  return x.size() < y.size();
}
template <class B>
bool scalar_less(const Jet<B>& a, const Jet<B>& b) {
  if (scalar_less(a.c(), b.c())) return true;
  if (scalar_less(b.c(), a.c())) return false;
  if (scalar_less(a.d1(), b.d1())) return true;
  if (scalar_less(b.d1(), a.d1())) return false;
  return scalar_less(a.d2(), b.d2());
}
template <class B>
bool scalar_less(const RatFun<B>& a, const RatFun<B>& b) {
  return a.to_string() < b.to_string();
}

// Coefficient embedding: Q -> anything, base -> extension/jets/functions,
// identity otherwise.
template <class T, class S>
T embed(const S& c, const typename T::field_type& target) {
  if constexpr (std::is_same_v<S, T>) {
    (void)target;
    return c;
  } else if constexpr (std::is_same_v<S, Rational>) {
    return target.from_rational(c);
  } else {
    return target.from_base(c);
  }
}

// Square roots where the field supports them (Q: perfect squares, F_p:
// Tonelli-Shanks). Canonical choice: positive for Q, smaller residue for F_p.
std::optional<Rational> field_sqrt(const Rational& a);
std::optional<Fp> field_sqrt(const Fp& a);
template <class S>
std::optional<S> field_sqrt(const S&) {
  throw UnsupportedDegree("square roots are only implemented over Q and F_p");
}

// Parse a rational literal "a" or "a/b" into any field.
template <class F>
typename F::element_type parse_scalar(const F& field, std::string_view text) {
  return field.from_rational(Rational::parse(text));
}
inline Fp parse_scalar(const PrimeField& field, std::string_view text) {
  return field.from_rational(Rational::parse(text));
}

}  // namespace linedyn
