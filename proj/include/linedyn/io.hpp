#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "linedyn/arrangements.hpp"
#include "linedyn/matroids.hpp"
#include "linedyn/mpoly.hpp"
#include "linedyn/prime_field.hpp"
#include "linedyn/rational.hpp"

// JSON forms used by the CLI reports and the dump command.
//   scalar       "a/b" (or "a"); residues print as their representative
//   polynomial   {"vars":["z1","z2","z3"],"terms":[{"e":[3,2,0],"c":"1"},...]}
//   arrangement  {"field":{...},"lines":[["1","0","0"],...]}, order = labels
namespace linedyn {

template <class S>
std::string scalar_json(const S& s) {
  return detail::scalar_str(s);
}

template <class S, std::size_t N>
nlohmann::json coords_json(const std::array<S, N>& c) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : c) j.push_back(scalar_json(v));
  return j;
}

template <class S>
nlohmann::json polynomial_json(const MPoly<S>& p, const std::vector<std::string>& vars) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(m.e.begin(), m.e.begin() + p.nvars());
    terms.push_back({{"e", e}, {"c", scalar_json(c)}});
  }
  return {{"vars", vars}, {"terms", terms}};
}

// Inverse of polynomial_json over Q; ParseError on malformed input.
MPoly<Rational> polynomial_from_json(const nlohmann::json& j);

template <class S>
nlohmann::json arrangement_json(const LabeledArrangement<S>& a) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& l : a.lines()) lines.push_back(coords_json(l.normal()));
  nlohmann::json field = a.size() ? a[0].normal()[0].field().descriptor().to_json() : nlohmann::json(nullptr);
  return {{"field", field}, {"lines", lines}};
}

// Arrangements over Q or F_p read back from arrangement_json.
LabeledArrangement<Rational> rational_arrangement_from_json(const nlohmann::json& j);
LabeledArrangement<Fp> prime_arrangement_from_json(const nlohmann::json& j);

nlohmann::json matroid_json(const Rank3Matroid& m);

}  // namespace linedyn
