#include "linedyn/rational.hpp"

#include <gmp.h>

#include "linedyn/field_descriptor.hpp"
#include "linedyn/scalar_traits.hpp"

namespace linedyn {

Rational RationalField::zero() const { return Rational(0); }
Rational RationalField::one() const { return Rational(1); }
Rational RationalField::from_int(std::int64_t v) const { return Rational(v); }
Rational RationalField::from_rational(const Rational& q) const { return q; }
FieldDescriptor RationalField::descriptor() const { return FieldDescriptor::rationals(); }

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw NonInvertible("rational with zero denominator");
  v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string& t) {
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    while (!t.empty() && t.back() == ' ') t.pop_back();
  };
  strip(s);
  auto slash = s.find('/');
  mpz_class num, den(1);
  try {
    if (slash == std::string::npos) {
      if (s.size() && s[0] == '+') s.erase(s.begin());
      num = mpz_class(s, 10);
    } else {
      std::string a = s.substr(0, slash), b = s.substr(slash + 1);
      strip(a);
      strip(b);
      if (a.size() && a[0] == '+') a.erase(a.begin());
      num = mpz_class(a, 10);
      den = mpz_class(b, 10);
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  if (den == 0) throw NonInvertible("rational with zero denominator: '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inv() const {
  if (is_zero()) throw NonInvertible("inverse of 0 in Q");
  mpq_class r = 1 / v_;
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw NonInvertible("division by 0 in Q");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const { return v_.get_str(10); }

std::optional<Rational> field_sqrt(const Rational& a) {
  if (a.sign() < 0) return std::nullopt;
  mpz_class n = a.numerator(), d = a.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

}  // namespace linedyn
