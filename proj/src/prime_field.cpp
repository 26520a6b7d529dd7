#include "linedyn/prime_field.hpp"

#include <string>

#include "linedyn/field_descriptor.hpp"
#include "linedyn/rational.hpp"
#include "linedyn/scalar_traits.hpp"

namespace linedyn {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_class pm;
  mpz_import(pm.get_mpz_t(), 1, -1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pm.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t modulus) : p(modulus) {
  if (modulus < 3 || modulus % 2 == 0 || modulus >= (std::uint64_t{1} << 63))
    throw UnsupportedDegree("prime field modulus must be an odd prime below 2^63, got " + std::to_string(modulus));
  if (!is_probable_prime(modulus)) throw UnsupportedDegree(std::to_string(modulus) + " is not prime");
}

Fp PrimeField::zero() const { return Fp(0, p); }
Fp PrimeField::one() const { return Fp(1, p); }
Fp PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return Fp(static_cast<std::uint64_t>(r), p);
}
Fp PrimeField::from_uint(std::uint64_t v) const { return Fp(v % p, p); }
Fp PrimeField::from_rational(const Rational& q) const {
  Fp num(mpz_mod_u64(q.numerator(), p), p);
  Fp den(mpz_mod_u64(q.denominator(), p), p);
  if (den.is_zero()) throw NonInvertible("denominator of " + q.to_string() + " vanishes mod " + std::to_string(p));
  return num / den;
}
FieldDescriptor PrimeField::descriptor() const { return FieldDescriptor::prime(p); }

Fp Fp::pow(std::uint64_t e) const { return Fp(powmod(v_, e, p_), p_); }

Fp Fp::inv() const {
  if (v_ == 0) throw NonInvertible("inverse of 0 in F_" + std::to_string(p_));
  return pow(p_ - 2);
}

std::optional<Fp> sqrt_in_field(const Fp& a) {
  const std::uint64_t p = a.modulus();
  if (a.is_zero()) return a;
  if (powmod(a.value(), (p - 1) / 2, p) != 1) return std::nullopt;
  // p - 1 = q * 2^s with q odd.
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(a.value(), q, p);
  std::uint64_t r = powmod(a.value(), (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  if (p - r < r) r = p - r;
  return Fp(r, p);
}

std::optional<Fp> field_sqrt(const Fp& a) { return sqrt_in_field(a); }

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace linedyn
