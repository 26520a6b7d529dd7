#pragma once

#include <map>
#include <optional>
#include <type_traits>
#include <vector>

#include "linedyn/mpoly.hpp"

namespace linedyn {

// a = b*q exactly, or nullopt. Division by leading terms in grlex order: when
// b | a every step peels off lt(q), so a failed monomial division proves
// non-divisibility.
template <class S>
std::optional<MPoly<S>> exact_divide(const MPoly<S>& a, const MPoly<S>& b) {
  if (b.is_zero()) throw NonInvertible("exact_divide by zero polynomial");
  using Term = typename MPoly<S>::Term;
  const auto& lb = b.leading_term();
  S lb_inv = lb.second.inv();
  MPoly<S> r = a;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const auto& lr = r.leading_term();
    if (!lb.first.divides(lr.first)) return std::nullopt;
    Monomial m = lr.first / lb.first;
    S c = lr.second * lb_inv;
    r = r - b.mul_term(m, c);
    q.emplace_back(m, std::move(c));
  }
  return MPoly<S>::from_terms(a.field(), a.nvars(), std::move(q));
}

// f = a*v^2 + b*v + c  ->  b^2 - 4ac.
template <class S>
MPoly<S> discriminant_wrt(const MPoly<S>& f, int v) {
  if (f.degree_in(v) != 2) throw UnsupportedDegree("discriminant_wrt needs degree exactly 2 in the variable");
  MPoly<S> a = f.coefficient_in(v, 2), b = f.coefficient_in(v, 1), c = f.coefficient_in(v, 0);
  return b * b - (a * c).scaled(f.field().from_int(4));
}

// Square root by grlex leading-term recursion. The sign is fixed by the
// canonical square root of the leading coefficient.
template <class S>
std::optional<MPoly<S>> poly_sqrt(const MPoly<S>& a) {
  if (a.is_zero()) return a;
  const auto& lt = a.leading_term();
  Monomial half;
  for (int i = 0; i < kMaxVars; ++i) {
    if (lt.first.e[i] % 2) return std::nullopt;
    half.e[i] = lt.first.e[i] / 2;
  }
  std::optional<S> c = field_sqrt(lt.second);
  if (!c) return std::nullopt;
  S two_c = *c + *c;
  if (two_c.is_zero()) throw UnsupportedDegree("poly_sqrt in characteristic 2");
  S two_c_inv = two_c.inv();
  MPoly<S> s = MPoly<S>::term(a.field(), a.nvars(), half, *c);
  Monomial last = half;
  for (std::size_t iter = 0; iter <= a.size() + 1; ++iter) {
    MPoly<S> r = a - s * s;
    if (r.is_zero()) return s;
    const auto& lr = r.leading_term();
    if (!half.divides(lr.first)) return std::nullopt;
    Monomial m = lr.first / half;
    // Each new term must be strictly below the previous one, otherwise the
    // residual cannot come from a square.
    if (!grlex_greater(last, m)) return std::nullopt;
    s = s + MPoly<S>::term(a.field(), a.nvars(), m, lr.second * two_c_inv);
    last = m;
  }
  return std::nullopt;
}

namespace detail {

template <class S>
std::vector<int> variables_of(const MPoly<S>& a, const MPoly<S>& b) {
  std::vector<int> vs;
  for (int v = 0; v < a.nvars(); ++v)
    if (a.uses_variable(v) || b.uses_variable(v)) vs.push_back(v);
  return vs;
}

template <class S>
MPoly<S> one_like(const MPoly<S>& a) {
  return MPoly<S>::constant(a.field(), a.nvars(), a.field().one());
}

template <class S>
MPoly<S> divide_or_throw(const MPoly<S>& a, const MPoly<S>& b) {
  auto q = exact_divide(a, b);
  if (!q) throw CertificationFailed("internal: expected exact division failed in gcd");
  return *q;
}

template <class S>
MPoly<S> gcd_core(const MPoly<S>& a, const MPoly<S>& b);
template <class S>
MPoly<S> gcd_prs(MPoly<S> a, MPoly<S> b, const std::vector<int>& vars, bool prs_only);

template <class S>
MPoly<S> gcd_rec(const MPoly<S>& a, const MPoly<S>& b, bool prs_only) {
  if (!prs_only) return gcd_core(a, b);
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto vars = variables_of(a, b);
  if (vars.empty() || a.is_constant() || b.is_constant()) return one_like(a);
  return gcd_prs(a, b, vars, true).monic();
}

// Content with respect to v: gcd of the coefficients of powers of v.
template <class S>
MPoly<S> content_in(const MPoly<S>& a, int v, bool prs_only) {
  MPoly<S> g(a.field(), a.nvars());
  for (int k = a.degree_in(v); k >= 0; --k) {
    MPoly<S> c = a.coefficient_in(v, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_rec(g, c, prs_only);
    if (g.is_constant()) return one_like(a);
  }
  return g.is_zero() ? one_like(a) : g.monic();
}

template <class S>
MPoly<S> primitive_part_in(const MPoly<S>& a, int v, bool prs_only) {
  if (a.is_zero()) return a;
  return divide_or_throw(a, content_in(a, v, prs_only)).monic();
}

template <class S>
MPoly<S> pseudo_remainder(MPoly<S> a, const MPoly<S>& b, int v) {
  int db = b.degree_in(v);
  MPoly<S> lb = b.coefficient_in(v, db);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    int da = a.degree_in(v);
    MPoly<S> la = a.coefficient_in(v, da);
    Monomial shift;
    shift.e[v] = static_cast<std::uint16_t>(da - db);
    a = lb * a - (la * b).mul_term(shift, a.field().one());
  }
  return a;
}

// Primitive PRS on the lowest-index variable, contents handled recursively.
template <class S>
MPoly<S> gcd_prs(MPoly<S> a, MPoly<S> b, const std::vector<int>& vars, bool prs_only) {
  int x = vars.front();
  if (vars.size() == 1) {
    UPoly<S> g = gcd(a.to_upoly(x), b.to_upoly(x));
    return MPoly<S>::from_upoly(a.field(), a.nvars(), x, g);
  }
  MPoly<S> ca = content_in(a, x, prs_only), cb = content_in(b, x, prs_only);
  MPoly<S> c = gcd_rec(ca, cb, prs_only);
  a = divide_or_throw(a, ca).monic();
  b = divide_or_throw(b, cb).monic();
  if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree_in(x) == 0) return c;  // primitive parts are coprime
    MPoly<S> r = pseudo_remainder(a, b, x);
    a = std::move(b);
    b = primitive_part_in(r, x, prs_only);
  }
  return c * a;
}

// ---- Brown's dense modular algorithm over F_p -------------------------------

// Polynomial viewed in Fp[x][others]: monomials with x zeroed, ordered lex
// descending, each mapped to a univariate coefficient in x.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_greater(a, b); }
};
using RecPoly = std::map<Monomial, UPoly<Fp>, LexGreater>;

inline RecPoly to_rec(const MPoly<Fp>& a, int x) {
  std::map<Monomial, std::vector<std::pair<int, Fp>>, LexGreater> tmp;
  for (const auto& t : a.terms()) {
    Monomial m = t.first;
    int k = m.e[x];
    m.e[x] = 0;
    tmp[m].emplace_back(k, t.second);
  }
  RecPoly r;
  Fp zero = a.field().zero();
  for (auto& [m, list] : tmp) {
    int d = 0;
    for (auto& [k, c] : list) d = std::max(d, k);
    std::vector<Fp> c(d + 1, zero);
    for (auto& [k, v] : list) c[k] = v;
    r.emplace(m, UPoly<Fp>(std::move(c)));
  }
  return r;
}

inline MPoly<Fp> from_rec(const RecPoly& r, int x, const PrimeField& f, int nvars) {
  std::vector<MPoly<Fp>::Term> terms;
  for (const auto& [m, u] : r)
    for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
      if (u.coeffs()[k].is_zero()) continue;
      Monomial mm = m;
      mm.e[x] = static_cast<std::uint16_t>(k);
      terms.emplace_back(mm, u.coeffs()[k]);
    }
  return MPoly<Fp>::from_terms(f, nvars, std::move(terms));
}

inline Monomial lex_leading(const MPoly<Fp>& a) {
  Monomial best = a.terms().front().first;
  for (const auto& t : a.terms())
    if (lex_greater(t.first, best)) best = t.first;
  return best;
}

inline MPoly<Fp> gcd_brown(const MPoly<Fp>& a, const MPoly<Fp>& b, const std::vector<int>& vars) {
  const PrimeField f = a.field();
  const int n = a.nvars();
  int x = vars.back();
  if (vars.size() == 1) {
    UPoly<Fp> g = gcd(a.to_upoly(x), b.to_upoly(x));
    return MPoly<Fp>::from_upoly(f, n, x, g);
  }
  RecPoly A = to_rec(a, x), B = to_rec(b, x);
  auto content = [](const RecPoly& r) {
    UPoly<Fp> g;
    for (const auto& kv : r) {
      g = gcd(g, kv.second);
      if (g.degree() == 0) break;
    }
    return g;
  };
  UPoly<Fp> ca = content(A), cb = content(B), c = gcd(ca, cb);
  int dA = 0, dB = 0;
  for (auto& kv : A) {
    kv.second = divmod(kv.second, ca).first;
    dA = std::max(dA, kv.second.degree());
  }
  for (auto& kv : B) {
    kv.second = divmod(kv.second, cb).first;
    dB = std::max(dB, kv.second.degree());
  }
  const UPoly<Fp>& la = A.begin()->second;
  const UPoly<Fp>& lb = B.begin()->second;
  UPoly<Fp> gamma = gcd(la, lb);
  const int bound = std::min(dA, dB) + gamma.degree();
  MPoly<Fp> ap = from_rec(A, x, f, n), bp = from_rec(B, x, f, n);
  std::vector<int> rest(vars.begin(), vars.end() - 1);

  RecPoly H;
  UPoly<Fp> M = UPoly<Fp>::constant(f.one());
  int points = 0;
  bool have_lm = false;
  Monomial lm{};
  std::uint64_t alpha_raw = 0;
  for (std::uint64_t tries = 0; tries < 4 * f.p + 16; ++tries) {
    alpha_raw = (alpha_raw + 1) % f.p;
    Fp alpha = f.from_uint(alpha_raw);
    Fp gamma_a = gamma(alpha);
    if (gamma_a.is_zero() || la(alpha).is_zero() || lb(alpha).is_zero()) continue;
    MPoly<Fp> Ga = gcd_core(ap.evaluate_var(x, alpha), bp.evaluate_var(x, alpha));
    // Normalize: lex leading coefficient (over the remaining variables) = gamma(alpha).
    Monomial glm = lex_leading(Ga);
    Ga = Ga.scaled(gamma_a / Ga.coefficient(glm));
    if (have_lm && lex_greater(glm, lm)) continue;  // unlucky evaluation
    if (!have_lm || lex_greater(lm, glm)) {          // previous points were unlucky
      H.clear();
      M = UPoly<Fp>::constant(f.one());
      points = 0;
      lm = glm;
      have_lm = true;
    }
    // Newton step: H += (Ga - H(alpha)) * M(x) / M(alpha).
    RecPoly Gr = to_rec(Ga, x);
    Fp m_inv = M(alpha).inv();
    bool unchanged = points > 0;
    for (const auto& [mono, u] : Gr) {
      Fp target = u.coeffs().empty() ? f.zero() : u.coeffs()[0];
      auto it = H.find(mono);
      Fp cur = it == H.end() ? f.zero() : it->second(alpha);
      Fp delta = target - cur;
      if (delta.is_zero()) continue;
      unchanged = false;
      UPoly<Fp> add = M.scaled(delta * m_inv);
      if (it == H.end())
        H.emplace(mono, add);
      else
        it->second += add;
    }
    for (auto& [mono, u] : H) {
      if (Gr.count(mono)) continue;
      Fp cur = u(alpha);
      if (cur.is_zero()) continue;
      unchanged = false;
      u += M.scaled(-cur * m_inv);
    }
    for (auto it = H.begin(); it != H.end();) it = it->second.is_zero() ? H.erase(it) : std::next(it);
    M *= UPoly<Fp>(std::vector<Fp>{-alpha, f.one()});
    ++points;
    if (!unchanged && points <= bound) continue;
    // Candidate: primitive part of H over Fp[x].
    RecPoly P = H;
    UPoly<Fp> cp = content(P);
    for (auto& kv : P) kv.second = divmod(kv.second, cp).first;
    MPoly<Fp> cand = from_rec(P, x, f, n);
    if (exact_divide(ap, cand) && exact_divide(bp, cand))
      return cand * MPoly<Fp>::from_upoly(f, n, x, c);
    if (points > bound) {  // the whole run was unlucky; start over
      H.clear();
      M = UPoly<Fp>::constant(f.one());
      points = 0;
      have_lm = false;
    }
  }
  throw CertificationFailed("Brown gcd ran out of evaluation points");
}

// ---- Multi-prime gcd over Q ---------------------------------------------------

// Word-size primes just below 2^62, generated once.
const std::vector<std::uint64_t>& gcd_primes();

// a/b = u (mod m) with |a|, |b| <= sqrt(m/2), or nullopt.
std::optional<Rational> rational_reconstruct(const mpz_class& u, const mpz_class& m);

inline MPoly<Rational> gcd_rational_modular(const MPoly<Rational>& a, const MPoly<Rational>& b) {
  const int n = a.nvars();
  std::map<Monomial, mpz_class, LexGreater> residues;
  mpz_class modulus = 1;
  bool have = false;
  Monomial lm{};
  std::optional<MPoly<Rational>> previous;
  for (std::uint64_t p : gcd_primes()) {
    PrimeField F(p);
    MPoly<Fp> ap, bp;
    try {
      ap = a.map_to<Fp>(F);
      bp = b.map_to<Fp>(F);
    } catch (const NonInvertible&) {
      continue;  // p divides a denominator
    }
    if (ap.is_zero() || bp.is_zero() || ap.leading_term().first != a.leading_term().first ||
        bp.leading_term().first != b.leading_term().first)
      continue;
    MPoly<Fp> gp = gcd_core(ap, bp);
    if (gp.is_constant()) return one_like(a);
    const Monomial& glm = gp.leading_term().first;
    if (have && grlex_greater(glm, lm)) continue;  // p is unlucky
    if (!have || grlex_greater(lm, glm)) {         // everything so far was unlucky
      residues.clear();
      modulus = 1;
      lm = glm;
      have = true;
      previous.reset();
    }
    mpz_class pz;
    mpz_import(pz.get_mpz_t(), 1, -1, sizeof(p), 0, 0, &p);
    mpz_class minv;
    {
      mpz_class mm = modulus % pz;
      mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
    }
    std::map<Monomial, std::uint64_t, LexGreater> image;
    for (const auto& t : gp.terms()) image[t.first] = t.second.value();
    for (const auto& kv : image) residues.try_emplace(kv.first, 0);
    for (auto& [m, r] : residues) {
      auto it = image.find(m);
      std::uint64_t rn = it == image.end() ? 0 : it->second;
      mpz_class rnz;
      mpz_import(rnz.get_mpz_t(), 1, -1, sizeof(rn), 0, 0, &rn);
      mpz_class d = (rnz - r) % pz;
      if (d < 0) d += pz;
      d = (d * minv) % pz;
      r += modulus * d;
    }
    modulus *= pz;
    std::vector<MPoly<Rational>::Term> terms;
    bool ok = true;
    for (const auto& [m, r] : residues) {
      auto q = rational_reconstruct(r, modulus);
      if (!q) {
        ok = false;
        break;
      }
      if (!q->is_zero()) terms.emplace_back(m, *q);
    }
    if (!ok) continue;
    MPoly<Rational> cand = MPoly<Rational>::from_terms(a.field(), n, std::move(terms));
    // Only pay for trial division once the reconstruction has stabilized.
    if (previous && *previous == cand && exact_divide(a, cand) && exact_divide(b, cand)) return cand;
    previous = std::move(cand);
  }
  throw CertificationFailed("modular gcd over Q exhausted its prime list");
}

template <class S>
MPoly<S> gcd_core(const MPoly<S>& a, const MPoly<S>& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<int> vars = variables_of(a, b);
  if (vars.empty() || a.is_constant() || b.is_constant()) return one_like(a);
  if constexpr (std::is_same_v<S, Fp>) {
    return gcd_brown(a, b, vars).monic();
  } else if constexpr (std::is_same_v<S, Rational>) {
    return gcd_rational_modular(a, b).monic();
  } else {
    return gcd_prs(a, b, vars, false).monic();
  }
}

}  // namespace detail

// gcd up to scalar, returned with grlex leading coefficient 1.
// Homogeneous inputs are dehomogenized on their last variable first: the gcd of
// homogeneous forms is the homogenization of the affine gcd times the common
// power of that variable.
template <class S>
MPoly<S> gcd(const MPoly<S>& a, const MPoly<S>& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto vars = detail::variables_of(a, b);
  if (vars.size() >= 2 && a.is_homogeneous() && b.is_homogeneous()) {
    int z = vars.back();
    int e = std::min(a.min_degree_in(z), b.min_degree_in(z));
    S one = a.field().one();
    MPoly<S> g = detail::gcd_core(a.evaluate_var(z, one), b.evaluate_var(z, one));
    g = g.homogenize(z, g.degree());
    Monomial ze;
    ze.e[z] = static_cast<std::uint16_t>(e);
    return g.mul_term(ze, one).monic();
  }
  return detail::gcd_core(a, b);
}

// The plain content/PRS recursion over any field; slower, kept as an oracle.
template <class S>
MPoly<S> gcd_by_prs(const MPoly<S>& a, const MPoly<S>& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto vars = detail::variables_of(a, b);
  if (vars.empty() || a.is_constant() || b.is_constant()) return detail::one_like(a);
  return detail::gcd_prs(a, b, vars, true).monic();
}

template <class S>
MPoly<S> gcd(const std::vector<MPoly<S>>& ps) {
  if (ps.empty()) throw UnsupportedDegree("gcd of an empty list");
  MPoly<S> g = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) g = gcd(g, ps[i]);
  return g.monic();
}

}  // namespace linedyn
