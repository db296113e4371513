#include "prcalc/eval.hpp"

#include "prcalc/errors.hpp"

namespace prcalc {

namespace {

struct Interp {
  const EvalBudget& budget;
  std::uint64_t steps = 0;

  void count_step() {
    ++steps;
    if (budget.max_total_steps && steps > budget.max_total_steps)
      throw BudgetExceeded("evaluation exceeded the total step budget");
  }

  Value go(const Term& f, const Value& a, std::uint64_t depth) {
    if (depth > budget.max_recursion_depth)
      throw BudgetExceeded("evaluation exceeded the recursion depth budget");
    count_step();
    switch (f.tag()) {
      case TermTag::Zero:
        if (!a.is_num() || a.as_num() != 0)
          throw DomainError("zero map applied outside 1 = {0}");
        return Value::num(Natural(0));
      case TermTag::Succ:
        return Value::num(a.as_num() + 1);
      case TermTag::Id:
        return a;
      case TermTag::Bang:
        return Value::num(Natural(0));
      case TermTag::Diag:
        return Value::pair(a, a);
      case TermTag::Swap:
        return Value::pair(a.second(), a.first());
      case TermTag::ProjL:
        return a.first();
      case TermTag::Comp:
        return go(f.child_v(), go(f.child_u(), a, depth + 1), depth + 1);
      case TermTag::Cyl:
        return Value::pair(a.first(), go(f.child_v(), a.second(), depth + 1));
      case TermTag::Iter: {
        Value state = a.first();
        const Natural& n = a.second().as_num();
        if (budget.max_iteration_steps && n > budget.max_iteration_steps)
          throw BudgetExceeded("iteration count exceeds the per-node budget");
        for (Natural i = 0; i < n; ++i) state = go(f.child_v(), state, depth + 1);
        return state;
      }
    }
    throw DomainError("unknown term tag");
  }
};

}  // namespace

Value eval(const Term& f, const Value& a, const EvalBudget& budget, EvalStats* stats) {
  TermType t = infer(f);
  if (!member(a, t.dom))
    throw DomainError("value " + a.show() + " is not in the domain " + t.dom.show());
  Interp in{budget};
  Value r = in.go(f, a, 0);
  if (stats) stats->steps = in.steps;
  return r;
}

}  // namespace prcalc
