#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "amoeba/polynomial.hpp"

namespace amoeba {

/// Default variable alphabet: x, y, z.
inline constexpr std::string_view kPolynomialVariables = "xyz";

/// Parses a +/- separated sum of monomials such as "1+x+3y+4xy+y^2+x^2*y".
/// Coefficients are integers, fractions (3/4) or decimals (0.25, read
/// exactly); multiplication is implicit or '*'; powers use '^' and may be
/// negative ("x^-1" or "x^(-1)"). Only the first `nvars` letters of
/// `variables` are accepted. Duplicate monomials are merged; a result that
/// cancels to zero is an error.
ExactPolynomial parse_polynomial(std::string_view text, int nvars,
                                 std::string_view variables = kPolynomialVariables);

/// Inverse of parse_polynomial: "1+4*x+6*y+24*x*y+12*x^2*y+2*y^2".
std::string to_string(const ExactPolynomial& p, std::string_view variables = kPolynomialVariables);

/// Parses "(0,0),(1,0),(2,1),(0,2)" into integer points. All points must
/// share one dimension.
std::vector<Exponent> parse_point_list(std::string_view text);

}  // namespace amoeba
