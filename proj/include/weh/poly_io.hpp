#pragma once

#include <string>

#include "weh/poly.hpp"

namespace weh {

// Canonical text form: terms in descending graded-lex order, each written as
// `c * x^e*y`, rational coefficients as num/den, extension coefficients as
// (a+b*sqrt(d)). print/parse round-trips bit-exactly.
std::string to_string(const Poly& p);

// Parses an expression over the table: rationals, sqrt(d), variables, + - * /
// ^ and parentheses. Division is only accepted when the divisor is a scalar
// or divides exactly; general rational functions live in RatFunc.
Poly parse_poly(const VarTablePtr& tab, const std::string& text);

} // namespace weh
