#pragma once

// Text formats shared by the CLI.
//
//   field   := "GF(" p [ "^" m ] [ ";" "modulus" "=" poly_in_t ] ")"
//   expr    := [ "+" | "-" ] term { ( "+" | "-" ) term }
//   term    := factor { "*" factor }
//   factor  := "-" factor | primary [ "^" integer ]
//   primary := integer | name | "(" expr ")"
//
// Names: `t` is the field generator; `x` is the indeterminate of a univariate
// Ore polynomial; `x1`, `x2` are the bivariate indeterminates. Products are
// evaluated in the skew ring, so `x2*t` and `t*x2` differ.

#include <string_view>

#include "orelim/bivar.hpp"

namespace orelim {

FieldPtr parse_field(std::string_view text);
FieldElem parse_field_elem(const FieldPtr& field, std::string_view text);
OrePoly parse_ore_poly(const Automorphism& sigma, std::string_view text);
BivarOrePoly parse_bivar(const Automorphism& sigma1, const Automorphism& sigma2,
                         std::string_view text);

}  // namespace orelim
