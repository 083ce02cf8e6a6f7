#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "minram/bivar.hpp"
#include "minram/poly.hpp"

namespace minram {

/// Canonical text: descending monomials, coefficients in 0..p-1, omitted
/// when 1, e.g. "t^4+4t+1". The zero polynomial prints as "0".
std::string to_string(const FpPoly& f, char var = 't');
/// "x^4+(t^2+2)*x^2+(t^4+2)".
std::string to_string(const XPoly& f);

/// Parses sums/products/powers of integers, t and parentheses, with optional
/// '*' (so "4t^6+11" and "2*(4t^6+11)" both work). A leading '[' switches to
/// the machine format: JSON integer array, ascending degree.
FpPoly parse_poly(std::string_view text, const PrimeField& field);
/// As parse_poly, but x is also a variable.
XPoly parse_xpoly(std::string_view text, const PrimeField& field);
/// Univariate parse in the given variable (used for polynomials in x over F_p).
FpPoly parse_univariate(std::string_view text, const PrimeField& field, char var);

nlohmann::json to_json(const FpPoly& f);
FpPoly poly_from_json(const nlohmann::json& j, const PrimeField& field);

}  // namespace minram
