#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linedyn/errors.hpp"
#include "linedyn/scalar_traits.hpp"
#include "linedyn/upoly.hpp"

namespace linedyn {

inline constexpr int kMaxVars = 8;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  int total() const {
    int s = 0;
    for (auto v : e) s += v;
    return s;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return r;
  }
  // Caller guarantees b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    return r;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Graded lex: higher total degree first, then lexicographic with variable 0
// most significant.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  int ta = a.total(), tb = b.total();
  if (ta != tb) return ta > tb;
  return a.e > b.e;
}
inline bool lex_greater(const Monomial& a, const Monomial& b) { return a.e > b.e; }

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : m.e) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Sparse polynomial in nvars variables, terms sorted by decreasing grlex
// monomial, no zero coefficients. Carries its coefficient field so that
// constants can be produced from an empty polynomial.
template <class S>
class MPoly {
 public:
  using scalar_type = S;
  using field_type = typename S::field_type;
  using Term = std::pair<Monomial, S>;

  MPoly() = default;
  MPoly(field_type f, int nvars) : f_(std::move(f)), n_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw UnsupportedDegree("MPoly supports at most 8 variables");
  }

  static MPoly constant(const field_type& f, int nvars, const S& c) {
    MPoly r(f, nvars);
    if (!c.is_zero()) r.t_.push_back({Monomial{}, c});
    return r;
  }
  static MPoly variable(const field_type& f, int nvars, int i) {
    MPoly r(f, nvars);
    Monomial m;
    m.e[i] = 1;
    r.t_.push_back({m, f.one()});
    return r;
  }
  static MPoly term(const field_type& f, int nvars, const Monomial& m, const S& c) {
    MPoly r(f, nvars);
    if (!c.is_zero()) r.t_.push_back({m, c});
    return r;
  }
  // Combines duplicates, drops zeros, sorts.
  static MPoly from_terms(const field_type& f, int nvars, std::vector<Term> terms) {
    MPoly r(f, nvars);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
    for (auto& t : terms) {
      if (!r.t_.empty() && r.t_.back().first == t.first) {
        r.t_.back().second += t.second;
        if (r.t_.back().second.is_zero()) r.t_.pop_back();
      } else if (!t.second.is_zero()) {
        r.t_.push_back(std::move(t));
      }
    }
    return r;
  }

  const field_type& field() const { return f_; }
  int nvars() const { return n_; }
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.total() == 0); }
  const Term& leading_term() const { return t_.front(); }

  // -1 for the zero polynomial.
  int degree() const { return t_.empty() ? -1 : t_.front().first.total(); }
  int degree_in(int v) const {
    int d = t_.empty() ? -1 : 0;
    for (const auto& t : t_) d = std::max<int>(d, t.first.e[v]);
    return d;
  }
  int min_degree_in(int v) const {
    int d = 1 << 20;
    for (const auto& t : t_) d = std::min<int>(d, t.first.e[v]);
    return t_.empty() ? 0 : d;
  }
  bool is_homogeneous() const {
    for (const auto& t : t_)
      if (t.first.total() != degree()) return false;
    return true;
  }
  bool uses_variable(int v) const {
    for (const auto& t : t_)
      if (t.first.e[v]) return true;
    return false;
  }
  S coefficient(const Monomial& m) const {
    for (const auto& t : t_)
      if (t.first == m) return t.second;
    return f_.zero();
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& t : r.t_) t.second = -t.second;
    return r;
  }
  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return MPoly(a.f_, a.n_);
    if (a.t_.size() == 1) return b.mul_term(a.t_[0].first, a.t_[0].second);
    if (b.t_.size() == 1) return a.mul_term(b.t_[0].first, b.t_[0].second);
    std::unordered_map<Monomial, S, MonomialHash> acc;
    acc.reserve(a.t_.size() * b.t_.size() / 2 + 16);
    for (const auto& x : a.t_)
      for (const auto& y : b.t_) {
        Monomial m = x.first * y.first;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(m, x.second * y.second);
        else
          it->second += x.second * y.second;
      }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& kv : acc)
      if (!kv.second.is_zero()) terms.emplace_back(kv.first, std::move(kv.second));
    MPoly r(a.f_, a.n_);
    std::sort(terms.begin(), terms.end(), [](const Term& u, const Term& v) { return grlex_greater(u.first, v.first); });
    r.t_ = std::move(terms);
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly scaled(const S& c) const {
    if (c.is_zero()) return MPoly(f_, n_);
    MPoly r = *this;
    for (auto& t : r.t_) t.second *= c;
    return r;
  }
  // Multiplication by a single term keeps grlex order, so no sort is needed.
  MPoly mul_term(const Monomial& m, const S& c) const {
    MPoly r(f_, n_);
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.first * m, t.second * c});
    return r;
  }

  MPoly pow(unsigned e) const {
    MPoly r = constant(f_, n_, f_.one());
    MPoly b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.n_ != b.n_ || a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].first != b.t_[i].first || a.t_[i].second != b.t_[i].second) return false;
    return true;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // Evaluate at a point whose coordinates live in T; coefficients are
  // embedded into T's field.
  template <class T>
  T evaluate(const std::vector<T>& pt, const typename T::field_type& tf) const {
    if (static_cast<int>(pt.size()) < n_) throw UnsupportedDegree("evaluate: too few coordinates");
    std::vector<std::vector<T>> pw(n_);
    for (int v = 0; v < n_; ++v) {
      int d = degree_in(v);
      pw[v].reserve(d + 1);
      pw[v].push_back(tf.one());
      for (int k = 1; k <= d; ++k) pw[v].push_back(pw[v].back() * pt[v]);
    }
    T acc = tf.zero();
    for (const auto& t : t_) {
      T m = embed<T>(t.second, tf);
      for (int v = 0; v < n_; ++v)
        if (t.first.e[v]) m *= pw[v][t.first.e[v]];
      acc += m;
    }
    return acc;
  }
  S evaluate(const std::vector<S>& pt) const { return evaluate<S>(pt, f_); }

  // Convert coefficients into another field.
  template <class T>
  MPoly<T> map_to(const typename T::field_type& tf) const {
    std::vector<typename MPoly<T>::Term> terms;
    terms.reserve(t_.size());
    for (const auto& t : t_) terms.emplace_back(t.first, embed<T>(t.second, tf));
    return MPoly<T>::from_terms(tf, n_, std::move(terms));
  }

  // Replace variable i by gs[i]; all gs share a ring.
  MPoly substitute(const std::vector<MPoly>& gs) const {
    if (static_cast<int>(gs.size()) < n_) throw UnsupportedDegree("substitute: too few polynomials");
    const field_type& gf = gs.empty() ? f_ : gs[0].f_;
    int gn = gs.empty() ? 0 : gs[0].n_;
    std::vector<std::vector<MPoly>> pw(n_);
    for (int v = 0; v < n_; ++v) {
      int d = degree_in(v);
      pw[v].push_back(constant(gf, gn, gf.one()));
      for (int k = 1; k <= d; ++k) pw[v].push_back(pw[v].back() * gs[v]);
    }
    // Products of variable powers are memoized by monomial prefix, so terms
    // sharing a prefix reuse the same large product.
    MPoly out(gf, gn);
    std::unordered_map<Monomial, MPoly, MonomialHash> partial;
    for (const auto& t : t_) {
      Monomial prefix;
      for (int v = 0; v < n_; ++v) {
        if (!t.first.e[v]) continue;
        Monomial prev = prefix;
        prefix.e[v] = t.first.e[v];
        if (partial.count(prefix)) continue;
        MPoly base = prev == Monomial{} ? constant(gf, gn, gf.one()) : partial.at(prev);
        partial.emplace(prefix, base * pw[v][t.first.e[v]]);
      }
      if (prefix == Monomial{})
        out += constant(gf, gn, t.second);
      else
        out += partial.at(prefix).scaled(t.second);
    }
    return out;
  }

  MPoly derivative(int v) const {
    std::vector<Term> terms;
    for (const auto& t : t_) {
      if (!t.first.e[v]) continue;
      Monomial m = t.first;
      S c = t.second * f_.from_int(m.e[v]);
      m.e[v]--;
      terms.emplace_back(m, c);
    }
    return from_terms(f_, n_, std::move(terms));
  }

  // Coefficient of v^k, as a polynomial with variable v absent.
  MPoly coefficient_in(int v, int k) const {
    std::vector<Term> terms;
    for (const auto& t : t_)
      if (t.first.e[v] == k) {
        Monomial m = t.first;
        m.e[v] = 0;
        terms.emplace_back(m, t.second);
      }
    MPoly r(f_, n_);
    r.t_ = std::move(terms);  // order survives removing one fixed exponent
    return r;
  }

  // Set variable v to a constant.
  MPoly evaluate_var(int v, const S& value) const {
    int d = degree_in(v);
    std::vector<S> pw{f_.one()};
    for (int k = 1; k <= d; ++k) pw.push_back(pw.back() * value);
    std::vector<Term> terms;
    terms.reserve(t_.size());
    for (const auto& t : t_) {
      Monomial m = t.first;
      int k = m.e[v];
      m.e[v] = 0;
      terms.emplace_back(m, k ? t.second * pw[k] : t.second);
    }
    return from_terms(f_, n_, std::move(terms));
  }

  MPoly homogeneous_part(int d) const {
    MPoly r(f_, n_);
    for (const auto& t : t_)
      if (t.first.total() == d) r.t_.push_back(t);
    return r;
  }

  // Homogenize with respect to variable v (which must not occur).
  MPoly homogenize(int v, int total_degree) const {
    std::vector<Term> terms;
    for (const auto& t : t_) {
      Monomial m = t.first;
      m.e[v] = static_cast<std::uint16_t>(total_degree - m.total());
      terms.emplace_back(m, t.second);
    }
    return from_terms(f_, n_, std::move(terms));
  }

  // Interpret as a univariate polynomial in v; other variables must be absent.
  UPoly<S> to_upoly(int v) const {
    std::vector<S> c(std::max(degree_in(v) + 1, 0), f_.zero());
    for (const auto& t : t_) {
      if (t.first.total() != t.first.e[v]) throw UnsupportedDegree("to_upoly: polynomial is not univariate");
      c[t.first.e[v]] = t.second;
    }
    return UPoly<S>(std::move(c));
  }
  static MPoly from_upoly(const field_type& f, int nvars, int v, const UPoly<S>& u) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
      Monomial m;
      m.e[v] = static_cast<std::uint16_t>(k);
      terms.emplace_back(m, u.coeffs()[k]);
    }
    return from_terms(f, nvars, std::move(terms));
  }

  // Rescale so the grlex leading coefficient is one.
  MPoly monic() const {
    if (is_zero()) return *this;
    return scaled(t_.front().second.inv());
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& t : t_) {
      std::string c = detail::scalar_str(t.second);
      bool neg = !c.empty() && c[0] == '-' && c.find_first_of("+ ", 1) == std::string::npos;
      if (neg) c = c.substr(1);
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      bool unit = (c == "1");
      bool needs_paren = c.find_first_of("+ ") != std::string::npos;
      std::string mono;
      for (int v = 0; v < n_; ++v) {
        if (!t.first.e[v]) continue;
        if (!mono.empty()) mono += "*";
        mono += v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v + 1);
        if (t.first.e[v] > 1) mono += "^" + std::to_string(t.first.e[v]);
      }
      if (mono.empty())
        out += c;
      else if (unit)
        out += mono;
      else
        out += (needs_paren ? "(" + c + ")" : c) + "*" + mono;
    }
    return out;
  }

 private:
  void check(const MPoly& o) const {
    if (n_ != o.n_) throw FieldMismatch("polynomials in different numbers of variables");
    if (!(f_ == o.f_)) throw FieldMismatch("polynomials over different fields");
  }
  static MPoly merge(const MPoly& a, const MPoly& b, bool negate) {
    a.check(b);
    MPoly r(a.f_, a.n_);
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size() || (i < a.t_.size() && grlex_greater(a.t_[i].first, b.t_[j].first))) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.t_.size() || grlex_greater(b.t_[j].first, a.t_[i].first)) {
        r.t_.push_back({b.t_[j].first, negate ? -b.t_[j].second : b.t_[j].second});
        ++j;
      } else {
        S c = negate ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
        if (!c.is_zero()) r.t_.push_back({a.t_[i].first, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  field_type f_{};
  int n_ = 0;
  std::vector<Term> t_;
};

}  // namespace linedyn
