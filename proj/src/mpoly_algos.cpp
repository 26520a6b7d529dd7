#include "linedyn/mpoly_algos.hpp"

namespace linedyn::detail {

const std::vector<std::uint64_t>& gcd_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = (std::uint64_t{1} << 62) - 1; out.size() < 400; c -= 2)
      if (is_probable_prime(c)) out.push_back(c);
    return out;
  }();
  return primes;
}

std::optional<Rational> rational_reconstruct(const mpz_class& u, const mpz_class& m) {
  mpz_class bound;
  {
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  }
  mpz_class r0 = m, r1 = u % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class q(r1, t1);
  q.canonicalize();
  return Rational(q);
}

}  // namespace linedyn::detail
