#pragma once

#include "ncres/xi_rational.hpp"

#include <stdexcept>
#include <string>

namespace ncres {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& what, size_t p)
        : std::runtime_error(what + " at offset " + std::to_string(p)), pos(p) {}
};

// Result grammar:
//   expr   := term (("+"|"-") term)*
//   term   := unary (("*"|"/") unary)*
//   unary  := "-" unary | power
//   power  := atom ("^" INT)?
//   atom   := INT | "(" expr ")" | "i" | "pi" | "Omega" | "s" | "trid" | "h'" | "h'(0)" | "dx'"
//           | "g(" KEY "," KEY ")" | "|" KEY "|^" EVEN | "div(" KEY ")" | "tr[" BODY "]" | "x"
// x stands for xi_n; division by x is allowed only through factors (x-i), (x+i), (1+x^2).
XiScalar parse_xi_expr(const std::string& text);

// the same grammar without x
ScalarExpr parse_result_expr(const std::string& text);

}  // namespace ncres
