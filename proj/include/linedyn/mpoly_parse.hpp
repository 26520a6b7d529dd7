#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linedyn/mpoly.hpp"
#include "linedyn/rational.hpp"

namespace linedyn {

// Parses expressions such as "y1^2*y2^2 - 2*y1*y3 + (x1-1)^2/8" over Q.
// Supports + - * / ^ and parentheses; division only by constants; exponents
// are non-negative integer literals.
MPoly<Rational> parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

}  // namespace linedyn
