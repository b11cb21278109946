#ifndef INEXP_PARSE_HPP
#define INEXP_PARSE_HPP

#include <string>
#include <vector>

#include "inexp/polynomial.hpp"

namespace inexp {

/// Parses an expression over + - * ^ ( ) with integer and a/b rational
/// literals. '^' binds tighter than '*' binds tighter than '+'/'-'; explicit
/// '*' is required (no juxtaposition); '/' may only join two integer
/// literals; unary minus is allowed. Throws ParseError with the offending
/// position.
Polynomial parse_polynomial(const std::string& src, const std::vector<std::string>& variables);

} // namespace inexp

#endif
