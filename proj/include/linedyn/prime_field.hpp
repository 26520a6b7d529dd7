#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "linedyn/errors.hpp"

namespace linedyn {

struct FieldDescriptor;
class Rational;
class Fp;

// Z/pZ for an odd prime p < 2^63. The constructor rejects composite moduli
// (UnsupportedDegree): Fermat inversion and Tonelli-Shanks silently misbehave
// on them.
struct PrimeField {
  using element_type = Fp;
  std::uint64_t p = 0;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t modulus);

  Fp zero() const;
  Fp one() const;
  Fp from_int(std::int64_t v) const;
  Fp from_uint(std::uint64_t v) const;
  Fp from_rational(const Rational& q) const;
  FieldDescriptor descriptor() const;
  bool operator==(const PrimeField& o) const { return p == o.p; }
  bool operator!=(const PrimeField& o) const { return p != o.p; }
};

class Fp {
 public:
  using field_type = PrimeField;

  Fp() = default;
  Fp(std::uint64_t reduced, std::uint64_t p) : v_(reduced), p_(p) {}

  PrimeField field() const { return PrimeField(p_); }
  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp inv() const;
  Fp pow(std::uint64_t e) const;

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) {
    check(o);
    std::uint64_t s = v_ + o.v_;  // both < 2^63, no overflow
    v_ = s >= p_ ? s - p_ : s;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    check(o);
    v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { a.check(b); return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string to_string() const { return std::to_string(v_); }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_) throw FieldMismatch("F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

inline std::string to_string(const Fp& a) { return a.to_string(); }

// Tonelli-Shanks. Returns the smaller of the two representatives of +-r, or
// nullopt when a is a non-residue.
std::optional<Fp> sqrt_in_field(const Fp& a);

bool is_probable_prime(std::uint64_t n);

}  // namespace linedyn
