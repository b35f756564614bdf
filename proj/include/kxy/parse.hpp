#pragma once

#include <string>
#include <string_view>

#include "kxy/poly.hpp"

namespace kxy {

// Grammar (whitespace insignificant, implicit multiplication disallowed):
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' nat)?
//   primary := rational | variable | '(' expr ')'
//   rational:= nat ('/' nat)?
// Throws ParseError with a byte offset on malformed input.
Poly parse_poly(std::string_view src, const Ring& ring);

// Deterministic canonical form: terms in descending graded-lex order,
// coefficients as integers or a/b, '^' for powers, '*' between factors.
// parse_poly(print_poly(f), f.ring()) == f for every canonical f.
std::string print_poly(const Poly& f);

}  // namespace kxy
