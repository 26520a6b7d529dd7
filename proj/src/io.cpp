#include "linedyn/io.hpp"

namespace linedyn {

MPoly<Rational> polynomial_from_json(const nlohmann::json& j) {
  try {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    const int n = static_cast<int>(vars.size());
    if (n > kMaxVars) throw ParseError("too many variables");
    RationalField Q;
    std::vector<MPoly<Rational>::Term> terms;
    for (const auto& t : j.at("terms")) {
      auto e = t.at("e").get<std::vector<int>>();
      if (static_cast<int>(e.size()) != n) throw ParseError("exponent vector length differs from the variable list");
      Monomial m;
      for (int i = 0; i < n; ++i) {
        if (e[i] < 0) throw ParseError("negative exponent");
        m.e[i] = static_cast<std::uint16_t>(e[i]);
      }
      terms.emplace_back(m, Rational::parse(t.at("c").get<std::string>()));
    }
    return MPoly<Rational>::from_terms(Q, n, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
}

namespace {

template <class S, class F>
LabeledArrangement<S> arrangement_from(const nlohmann::json& j, const F& field) {
  std::vector<ProjLine2<S>> lines;
  for (const auto& l : j.at("lines")) {
    auto c = l.get<std::vector<std::string>>();
    if (c.size() != 3) throw ParseError("a line needs three coordinates");
    lines.emplace_back(Vec3<S>{parse_scalar(field, c[0]), parse_scalar(field, c[1]), parse_scalar(field, c[2])});
  }
  return LabeledArrangement<S>(std::move(lines));
}

}  // namespace

LabeledArrangement<Rational> rational_arrangement_from_json(const nlohmann::json& j) {
  try {
    if (FieldDescriptor::from_json(j.at("field")).kind != FieldDescriptor::Kind::Q)
      throw FieldMismatch("arrangement is not over Q");
    return arrangement_from<Rational>(j, RationalField{});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("arrangement JSON: ") + e.what());
  }
}

LabeledArrangement<Fp> prime_arrangement_from_json(const nlohmann::json& j) {
  try {
    FieldDescriptor d = FieldDescriptor::from_json(j.at("field"));
    if (d.kind != FieldDescriptor::Kind::Fp) throw FieldMismatch("arrangement is not over a prime field");
    return arrangement_from<Fp>(j, PrimeField(d.p));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("arrangement JSON: ") + e.what());
  }
}

nlohmann::json matroid_json(const Rank3Matroid& m) {
  return {{"ground", m.ground()}, {"nonbases", m.nonbases()}};
}

}  // namespace linedyn
