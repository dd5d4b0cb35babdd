#pragma once

#include <string>
#include <string_view>

#include "matfac/polynomial.hpp"

namespace mfac {

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' INT)?
//   atom   := INT ('/' INT)? | IDENT | '(' expr ')'
// IDENT is a ring variable, or the root of unity zeta_m written `z`
// (`zeta` when the ring has a variable named z). ParseError positions are
// 0-based character offsets.
Polynomial parse_poly(std::string_view text, const Ring& ring);

// Name used for zeta_m when printing over this ring.
std::string zeta_symbol(const Ring& ring);

// Canonical text: terms in grlex order, largest first. Coefficients of the
// form q*zeta^j print as "q*z^j"; other field elements print in basis form
// inside parentheses.
std::string to_string(const Polynomial& p);
std::string to_string(const CycloElem& c, const std::string& symbol = "z");

}  // namespace mfac
