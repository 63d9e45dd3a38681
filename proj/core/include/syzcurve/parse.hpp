#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "syzcurve/numfield.hpp"
#include "syzcurve/polyring.hpp"

namespace syzcurve {

// Grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := ('-'|'+')? base ('^' uint)?
//   base     := 'x' | 'y' | 'z' | fieldgen | rational | '(' expr ')'
//   rational := int ('/' uint)?
// Errors are ParseError with the byte offset of the offending token.
HomogPoly parse_poly(std::string_view text, const NumberField& field);

// A degree-0 expression in the field generator only.
FieldElement parse_field_element(std::string_view text, const NumberField& field);

// Univariate polynomial in `var`, returned low to high.
std::vector<Rational> parse_univariate(std::string_view text, const std::string& var);

}  // namespace syzcurve
