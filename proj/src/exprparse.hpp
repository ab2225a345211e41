#pragma once

#include <string>

#include "algebra.hpp"

namespace voa {

// State expression grammar (whitespace-insensitive):
//   expr    := term (('+' | '-') term)*
//   term    := ['-'] [rational '*'] factor | ['-'] rational
//   factor  := primary ['_(' int ')' factor]
//   primary := generator | 'd' ['^' int] primary | ':' factor factor+ ':'
//            | 'omega' '(' int ',' int ')' | '(' expr ')'
// 'omega(a,b)' abbreviates :(d^a g)(d^b g): in the first generator g.
// Throws std::invalid_argument with the offending position.
State parse_expr(const std::string& src, const AlgebraPtr& h);

}  // namespace voa
