#include "linedyn/mpoly_parse.hpp"

#include <cctype>

namespace linedyn {

namespace {

using P = MPoly<Rational>;

class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  P parse() {
    P r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  P constant(const Rational& q) const { return P::constant(RationalField{}, static_cast<int>(vars_.size()), q); }

  P expr() {
    P r = term();
    for (;;) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }
  P term() {
    P r = unary();
    for (;;) {
      if (eat('*')) {
        r = r * unary();
      } else if (eat('/')) {
        P d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
        r = r.scaled(d.leading_term().second.inv());
      } else {
        return r;
      }
    }
  }
  P unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  P power() {
    P base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start)))));
    }
    return base;
  }
  P atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      P r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return constant(Rational::parse(s_.substr(start, i_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name(s_.substr(start, i_ - start));
      for (std::size_t v = 0; v < vars_.size(); ++v)
        if (vars_[v] == name) return P::variable(RationalField{}, static_cast<int>(vars_.size()), static_cast<int>(v));
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t i_ = 0;
};

}  // namespace

MPoly<Rational> parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

}  // namespace linedyn
