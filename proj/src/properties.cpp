#include "linedyn/properties.hpp"

#include <functional>
#include <random>

#include "linedyn/dynamics.hpp"
#include "linedyn/extension.hpp"
#include "linedyn/mpoly_algos.hpp"
#include "linedyn/ratfun.hpp"

namespace linedyn {

namespace {

constexpr std::uint64_t kPrime = 100003;

// Runs `one` for each instance; a non-empty string is a failure description.
PropertyResult run(const std::string& name, std::size_t instances, const std::function<std::string(std::size_t)>& one) {
  PropertyResult r;
  r.name = name;
  for (std::size_t i = 0; i < instances; ++i) {
    std::string msg;
    try {
      msg = one(i);
    } catch (const Error& e) {
      msg = std::string(e.kind()) + ": " + e.what();
    }
    r.instances++;
    if (!msg.empty()) {
      r.failures++;
      if (r.first_failure.empty()) r.first_failure = "instance " + std::to_string(i) + ": " + msg;
    }
  }
  return r;
}

template <class S, class F>
std::string field_axioms(const S& a, const S& b, const S& c, const F& f) {
  if (a + b != b + a) return "addition is not commutative";
  if (a * b != b * a) return "multiplication is not commutative";
  if ((a + b) + c != a + (b + c)) return "addition is not associative";
  if ((a * b) * c != a * (b * c)) return "multiplication is not associative";
  if (a * (b + c) != a * b + a * c) return "distributivity fails";
  if (a + f.zero() != a || a * f.one() != a) return "identities fail";
  if (a - a != f.zero()) return "additive inverse fails";
  if (!a.is_zero() && a * a.inv() != f.one()) return "multiplicative inverse fails";
  if (!b.is_zero() && (a / b) * b != a) return "division does not invert multiplication";
  return {};
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000), den(1, 1000);
  return Rational(num(rng), den(rng));
}

Fp random_fp(const PrimeField& f, std::mt19937_64& rng) {
  return f.from_uint(std::uniform_int_distribution<std::uint64_t>(0, f.p - 1)(rng));
}

MPoly<Fp> random_poly(const PrimeField& f, std::mt19937_64& rng, int nvars, int max_deg, int terms) {
  std::uniform_int_distribution<int> e(0, max_deg);
  std::vector<MPoly<Fp>::Term> t;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    int budget = max_deg;
    for (int v = 0; v < nvars; ++v) {
      int k = std::min(budget, e(rng));
      m.e[v] = static_cast<std::uint16_t>(k);
      budget -= k;
    }
    t.emplace_back(m, random_fp(f, rng));
  }
  return MPoly<Fp>::from_terms(f, nvars, std::move(t));
}

ProjMap2<Fp> random_projectivity(const PrimeField& f, std::mt19937_64& rng) {
  for (;;) {
    Mat3<Fp> m;
    for (auto& row : m.m)
      for (auto& v : row) v = random_fp(f, rng);
    if (!m.det().is_zero()) return ProjMap2<Fp>(m);
  }
}

}  // namespace

PropertyResult property_field_axioms_rational(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  RationalField Q;
  return run("field axioms over Q", instances, [&](std::size_t) {
    return field_axioms(random_rational(rng), random_rational(rng), random_rational(rng), Q);
  });
}

PropertyResult property_field_axioms_prime(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  PrimeField f(kPrime);
  return run("field axioms over F_p", instances, [&](std::size_t) {
    return field_axioms(random_fp(f, rng), random_fp(f, rng), random_fp(f, rng), f);
  });
}

PropertyResult property_field_axioms_extension(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  // Q(r) with r^3 - 4r^2 + 3r + 1 = 0, and F_p(u) with u^2 = 5 (5 is a
  // non-residue mod 100003 since 100003 = 3 mod 5).
  RationalField Q;
  auto cubic = adjoin_root(Q, {Rational(1), Rational(3), Rational(-4), Rational(1)});
  PrimeField f(kPrime);
  auto quad = adjoin_root(f, {f.from_int(-5), f.zero(), f.one()});
  auto rand_cubic = [&] {
    auto a = cubic.zero();
    auto u = cubic.generator();
    auto pw = cubic.one();
    for (int i = 0; i < 3; ++i, pw = pw * u) a = a + pw * cubic.from_rational(random_rational(rng));
    return a;
  };
  auto rand_quad = [&] { return quad.from_base(random_fp(f, rng)) + quad.generator() * quad.from_base(random_fp(f, rng)); };
  return run("field axioms over algebraic extensions", instances, [&](std::size_t i) {
    if (i % 2 == 0) return field_axioms(rand_cubic(), rand_cubic(), rand_cubic(), cubic);
    return field_axioms(rand_quad(), rand_quad(), rand_quad(), quad);
  });
}

PropertyResult property_field_axioms_ratfun(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  PrimeField f(kPrime);
  RatFunField<Fp> k{f, "t"};
  auto rand_poly = [&](int deg) {
    std::vector<Fp> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_fp(f, rng));
    return UPoly<Fp>(std::move(c));
  };
  auto rand_fun = [&] {
    UPoly<Fp> d = rand_poly(2);
    if (d.is_zero()) d = UPoly<Fp>::constant(f.one());
    return RatFun<Fp>(k, rand_poly(3), d);
  };
  return run("field axioms over F_p(t)", instances,
             [&](std::size_t) { return field_axioms(rand_fun(), rand_fun(), rand_fun(), k); });
}

PropertyResult property_polynomial_ring(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  PrimeField f(kPrime);
  return run("polynomial ring axioms", instances, [&](std::size_t) -> std::string {
    auto a = random_poly(f, rng, 3, 4, 6), b = random_poly(f, rng, 3, 4, 6), c = random_poly(f, rng, 3, 4, 6);
    if (a + b != b + a || a * b != b * a) return "commutativity fails";
    if ((a * b) * c != a * (b * c)) return "multiplication is not associative";
    if (a * (b + c) != a * b + a * c) return "distributivity fails";
    if (a - a != MPoly<Fp>(f, 3)) return "a - a is not zero";
    std::vector<Fp> pt{random_fp(f, rng), random_fp(f, rng), random_fp(f, rng)};
    if ((a * b).evaluate(pt) != a.evaluate(pt) * b.evaluate(pt)) return "evaluation is not multiplicative";
    return {};
  });
}

PropertyResult property_gcd_divide(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  PrimeField f(kPrime);
  return run("gcd and exact division round trips", instances, [&](std::size_t) -> std::string {
    auto g = random_poly(f, rng, 3, 3, 4), u = random_poly(f, rng, 3, 3, 4), v = random_poly(f, rng, 3, 3, 4);
    if (g.is_zero() || u.is_zero() || v.is_zero()) return {};
    auto a = g * u, b = g * v;
    auto q = exact_divide(a, g);
    if (!q || *q != u) return "exact_divide(g u, g) != u";
    auto h = gcd(a, b);
    if (!exact_divide(h, g.monic())) return "gcd(g u, g v) is not divisible by g";
    if (!exact_divide(a, h) || !exact_divide(b, h)) return "gcd does not divide its inputs";
    return {};
  });
}

PropertyResult property_sqrt(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  PrimeField f(kPrime);
  return run("square roots of squares", instances, [&](std::size_t) -> std::string {
    auto a = random_poly(f, rng, 3, 4, 5);
    if (a.is_zero()) return {};
    auto s = poly_sqrt(a * a);
    if (!s) return "poly_sqrt(a^2) failed";
    if (*s != a && *s != -a) return "poly_sqrt(a^2) != +-a";
    Fp x = random_fp(f, rng);
    auto r = field_sqrt(x * x);
    if (!r || (*r != x && *r != -x)) return "field_sqrt(x^2) != +-x";
    return {};
  });
}

PropertyResult property_lambda_equivariance(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  PrimeField f(kPrime);
  return run("PGL3 equivariance of the labeled operators", instances, [&](std::size_t i) -> std::string {
    int n = i % 2 ? 8 : 7;
    auto x = random_realizable_point(n, f, rng);
    auto c = checked_realization(n, x).c0;
    auto g = random_projectivity(f, rng);
    auto lhs = labeled_lambda(n, apply(g, c));
    auto rhs = apply(g, labeled_lambda(n, c));
    if (!(lhs == rhs)) return "Lambda(g C) != g Lambda(C) for n = " + std::to_string(n);
    return {};
  });
}

PropertyResult property_period_map(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  PrimeField f(kPrime);
  return run("period map round trip and PGL3 invariance", instances, [&](std::size_t i) -> std::string {
    int n = i % 2 ? 8 : 7;
    auto x = random_realizable_point(n, f, rng);
    auto all = checked_realization(n, x).all();
    if (!chart_equal(period_map(n, all), x)) return "period map does not return the source point";
    auto g = random_projectivity(f, rng);
    if (!chart_equal(period_map(n, apply(g, all)), x)) return "period map is not PGL3 invariant";
    return {};
  });
}

std::vector<PropertyResult> run_property_suites(std::uint64_t seed, std::size_t instances) {
  return {
      property_field_axioms_rational(seed + 1, instances),  property_field_axioms_prime(seed + 2, instances),
      property_field_axioms_extension(seed + 3, instances), property_field_axioms_ratfun(seed + 4, instances),
      property_polynomial_ring(seed + 5, instances),        property_gcd_divide(seed + 6, instances),
      property_sqrt(seed + 7, instances),                   property_lambda_equivariance(seed + 8, instances),
      property_period_map(seed + 9, instances),
  };
}

}  // namespace linedyn
