#pragma once

#include <cstdint>

#include "prcalc/term.hpp"

namespace prcalc {

// <f,g> : C -> A x B for f : C -> A, g : C -> B, via diagonal,
// cylindrification, transposition and composition. TypeError if the
// domains of f and g disagree.
Term pairing(const Term& f, const Term& g);

// Right projection A x B -> B, derived from the transposition and the
// left projection.
Term projr(const Obj& a, const Obj& b);

// Numeral n : 1 -> N as n nested successors over zero.
Term numeral(std::uint64_t n);

// Constant map A -> N with value n.
Term constant(const Obj& a, std::uint64_t n);

// Named derived combinators, built once from the ten constructors and
// shared. Booleans are naturals constrained to {0,1}.
struct StdTerms {
  Term add;   // N x N -> N   (a,n) -> a+n
  Term pred;  // N -> N       predecessor, 0 -> 0
  Term sub;   // N x N -> N   truncated subtraction
  Term not_;  // N -> N       1 at 0, else 0
  Term sign;  // N -> N       0 at 0, else 1
  Term or_;   // N x N -> N
  Term and_;  // N x N -> N
  Term eq;    // N x N -> N   equality test
  Term mult;  // N x N -> N
  Term pow;   // N x N -> N   (x,y) -> x^y with 0^0 = 1
};

const StdTerms& std_terms();

}  // namespace prcalc
