#pragma once

#include <string>
#include <string_view>

#include "sfsurg/seifert.hpp"
#include "sfsurg/tangle.hpp"

namespace sfsurg {

// Text forms, whitespace-insensitive:
//   K(p1/q1, p2/q2, ...)       Montesinos link, optional "; e" twist term
//   P(q1, q2, ...)             pretzel link, optional "; e"
//   M(r1, r2, ...)             Seifert space with b = 0
//   M(b; r1, r2, ...)          Seifert space with explicit b
// Errors are std::invalid_argument with the offending token in the message.
MontesinosLink parse_knot(std::string_view text);
SeifertInvariants parse_sfs(std::string_view text);

// "P(q1, ..., qk; e)" when every tangle is 1/q, otherwise the K(...) form.
std::string format_pretzel(const MontesinosLink& k);

}  // namespace sfsurg
