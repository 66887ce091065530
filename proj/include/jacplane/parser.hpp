#pragma once

#include <string_view>

#include "jacplane/poly.hpp"

namespace jacplane {

// Parses the curve grammar:
//
//   expr   := '-'? term (('+'|'-') term)*
//   term   := coeff? ('*'? factor)*
//   factor := ('x'|'y'|'z') ('^' uint)?  |  '(' expr ')'
//   coeff  := uint
//
// Whitespace is ignored and juxtaposition multiplies ("xy^2" = x*y^2).
// Rejects non-homogeneous results (reporting two offending degrees) and the
// zero polynomial.  Throws ParseError with the byte offset on bad syntax.
HomogPoly parse_poly(std::string_view text);

}  // namespace jacplane
