#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "linedyn/errors.hpp"

namespace linedyn {

struct FieldDescriptor;
class Rational;

// The field Q. Stateless; every instance compares equal.
struct RationalField {
  using element_type = Rational;
  Rational zero() const;
  Rational one() const;
  Rational from_int(std::int64_t v) const;
  Rational from_rational(const Rational& q) const;
  FieldDescriptor descriptor() const;
  bool operator==(const RationalField&) const { return true; }
};

// Arbitrary precision rational backed by GMP's mpq_class, which keeps values
// canonical (lowest terms, positive denominator) after every operation.
class Rational {
 public:
  using field_type = RationalField;

  Rational() = default;
  Rational(std::int64_t v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& v) : v_(v) {}

  // Accepts "a", "-a", "a/b".
  static Rational parse(std::string_view text);

  RationalField field() const { return {}; }
  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational inv() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  std::string to_string() const;

 private:
  mpq_class v_;
};

inline std::string to_string(const Rational& q) { return q.to_string(); }

}  // namespace linedyn
