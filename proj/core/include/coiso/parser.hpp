#pragma once

#include "coiso/ratfunc.hpp"

namespace coiso {

// Literal grammar for scene files: integer/rational coefficients, + - * / ^,
// parentheses; variables must be declared. Juxtaposition ("2x") is an error.
// parse_poly rejects division except by constants; parse_ratfunc allows
// denominators that normalize to powers of the chart denominator h.
Poly parse_poly(const std::string& text, const VarList& vars);
RatFunc parse_ratfunc(const std::string& text, const VarList& vars, const Poly& h);

}  // namespace coiso
