#pragma once

#include <map>
#include <string>
#include <string_view>

#include "slopesmith/laurent.hpp"

namespace slopesmith {

// Parses integers and rationals, the two declared variables, + - * ^ and
// parentheses. Exponents are integers and may be negative on monomials.
// Errors carry the 0-based character offset.
LaurentPoly2 parse_poly(std::string_view text, const VarNames& vars = VarNames::mb());

// Canonical form: terms by descending total degree, then descending first
// exponent; coefficient first, variables in declaration order.
// Example: "m^2*b - 3*m*b^2 + 3*m - b".
std::string to_string(const LaurentPoly2& p);

// A polynomial file: '#' comment lines (optionally "# key: value" metadata),
// one header line "vars: m b", then the polynomial text (may span lines).
struct PolyFile {
  std::map<std::string, std::string> metadata;
  VarNames vars;
  bool vars_declared = false;
  LaurentPoly2 poly;
};

// `fallback_vars` is used when the text has no "vars:" header.
PolyFile parse_poly_file(std::string_view text, const VarNames& fallback_vars = VarNames::mb());

}  // namespace slopesmith
