#pragma once

#include <cstdint>

#include "prcalc/term.hpp"
#include "prcalc/value.hpp"

namespace prcalc {

// Guards for desk-scale runs. Exceeding a budget raises BudgetExceeded,
// never a silently truncated result. 0 means unlimited where noted.
struct EvalBudget {
  std::uint64_t max_recursion_depth = 10'000;
  std::uint64_t max_iteration_steps = 1'000'000;  // per iteration node evaluation; 0 = unlimited
  std::uint64_t max_total_steps = 0;              // per top-level call; 0 = unlimited
};

struct EvalStats {
  std::uint64_t steps = 0;
};

// Structural interpretation of a well-typed term on a member of its domain.
// TypeError if f is ill-typed, DomainError if a is outside dom(f).
Value eval(const Term& f, const Value& a, const EvalBudget& budget = {},
           EvalStats* stats = nullptr);

}  // namespace prcalc
