#pragma once

#include <string_view>

#include "prcalc/obj.hpp"
#include "prcalc/term.hpp"

namespace prcalc {

// Parenthesized prefix grammar, whitespace-insensitive:
//   obj  := "1" | "N" | "(x " obj " " obj ")"
//   term := "zero" | "succ" | "(id " obj ")" | "(bang " obj ")" | "(diag " obj ")"
//         | "(swap " obj " " obj ")" | "(projl " obj " " obj ")"
//         | "(comp " term " " term ")" | "(cyl " obj " " term ")" | "(iter " term ")"
// Errors carry line and column. Term::show / Obj::show emit this grammar.
Term parse_term(std::string_view text);
Obj parse_obj(std::string_view text);

}  // namespace prcalc
