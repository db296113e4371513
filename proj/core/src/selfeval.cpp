#include "prcalc/selfeval.hpp"

#include <vector>

#include "prcalc/combinators.hpp"
#include "prcalc/errors.hpp"

namespace prcalc {

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

struct IntrinsicEntry {
  Code body;
  int op;
};

}  // namespace

std::size_t SelfEvaluator::MemoKeyHash::operator()(const MemoKey& k) const {
  return mix(reinterpret_cast<std::size_t>(k.node), k.arg.hash());
}

SelfEvaluator::SelfEvaluator(EvOptions opts) : opts_(opts) {}

void SelfEvaluator::clear_memo() {
  memo_.clear();
  iter_front_.clear();
}

namespace {

// Bodies of the combinators the evaluator may compute arithmetically.
const std::vector<std::pair<Code, int>>& intrinsic_table() {
  static const std::vector<std::pair<Code, int>> table = [] {
    const StdTerms& st = std_terms();
    auto body = [](const Term& t) { return code_of(t).unpair().second; };
    std::vector<std::pair<Code, int>> v;
    v.emplace_back(body(st.add), 1);
    v.emplace_back(body(st.pred), 2);
    v.emplace_back(body(st.sub), 3);
    v.emplace_back(body(st.not_), 4);
    v.emplace_back(body(st.sign), 5);
    v.emplace_back(body(st.or_), 6);
    v.emplace_back(body(st.and_), 7);
    v.emplace_back(body(st.eq), 8);
    v.emplace_back(body(st.mult), 9);
    v.emplace_back(body(st.pow), 10);
    return v;
  }();
  return table;
}

}  // namespace

SelfEvaluator::Intr SelfEvaluator::intrinsic_of(const Code& body) {
  auto it = intr_cache_.find(body.node_id());
  if (it != intr_cache_.end()) return it->second;
  Intr op = Intr::None;
  for (const auto& [b, o] : intrinsic_table()) {
    if (body == b) {
      op = static_cast<Intr>(o);
      break;
    }
  }
  intr_cache_.emplace(body.node_id(), op);
  return op;
}

void SelfEvaluator::require_iter_budget(const Natural& steps) const {
  if (opts_.budget.max_iteration_steps && steps > opts_.budget.max_iteration_steps)
    throw BudgetExceeded("iteration count exceeds the per-node budget");
}

Value SelfEvaluator::apply_intrinsic(Intr op, const Value& a) {
  // Each case mirrors the structural recursion of the matching combinator
  // exactly, including which argument drives the iteration budget.
  auto num2 = [&](const Value& v) -> std::pair<const Natural&, const Natural&> {
    return {v.first().as_num(), v.second().as_num()};
  };
  switch (op) {
    case Intr::Add: {
      auto [x, n] = num2(a);
      require_iter_budget(n);
      return Value::num(x + n);
    }
    case Intr::Pred: {
      const Natural& n = a.as_num();
      require_iter_budget(n);
      return Value::num(n == 0 ? Natural(0) : Natural(n - 1));
    }
    case Intr::Sub: {
      auto [x, y] = num2(a);
      require_iter_budget(y);
      if (y > 0) require_iter_budget(x);
      return Value::num(x > y ? Natural(x - y) : Natural(0));
    }
    case Intr::Not: {
      const Natural& n = a.as_num();
      require_iter_budget(n);
      return Value::num(Natural(n == 0 ? 1 : 0));
    }
    case Intr::Sign: {
      const Natural& n = a.as_num();
      require_iter_budget(n);
      return Value::num(Natural(n == 0 ? 0 : 1));
    }
    case Intr::Or: {
      auto [x, y] = num2(a);
      require_iter_budget(x);
      require_iter_budget(y);
      return Value::num(Natural(x != 0 || y != 0 ? 1 : 0));
    }
    case Intr::And: {
      auto [x, y] = num2(a);
      require_iter_budget(x);
      require_iter_budget(y);
      return Value::num(Natural(x != 0 && y != 0 ? 1 : 0));
    }
    case Intr::Eq: {
      auto [x, y] = num2(a);
      require_iter_budget(x);
      require_iter_budget(y);
      return Value::num(Natural(x == y ? 1 : 0));
    }
    case Intr::Mult: {
      auto [x, y] = num2(a);
      require_iter_budget(y);
      if (y >= 2) require_iter_budget(x * (y - 1));
      return Value::num(x * y);
    }
    case Intr::Pow: {
      auto [x, y] = num2(a);
      require_iter_budget(y);
      Natural acc = 1;
      for (Natural i = 0; i < y; ++i) {
        require_iter_budget(acc);
        if (acc >= 2) require_iter_budget(x * (acc - 1));
        acc = x * acc;
      }
      return Value::num(acc);
    }
    case Intr::None:
      break;
  }
  throw DomainError("not an intrinsic");
}

void SelfEvaluator::check_measure(std::uint64_t parent_depth,
                                  const Natural* parent_remaining,
                                  std::uint64_t child_depth,
                                  const Natural* child_remaining) {
  ++stats_.measure_checks;
  if (child_depth < parent_depth) return;
  if (child_depth == parent_depth && parent_remaining && child_remaining &&
      *child_remaining < *parent_remaining)
    return;
  ++stats_.measure_violations;
}

Value SelfEvaluator::ev_body(const Code& body, const Value& a, std::uint64_t depth,
                             std::uint64_t parent_depth, const Natural* parent_remaining) {
  ++stats_.calls;
  ++steps_this_call_;
  if (depth > opts_.budget.max_recursion_depth)
    throw BudgetExceeded("self-evaluation exceeded the recursion depth budget");
  if (opts_.budget.max_total_steps && steps_this_call_ > opts_.budget.max_total_steps)
    throw BudgetExceeded("self-evaluation exceeded the total step budget");

  const CodeAnalyzer::Info& info = an_.body(body);
  if (opts_.instrument && parent_depth)
    check_measure(parent_depth, parent_remaining, info.depth, nullptr);

  // Only iteration nodes are cached: they are the ones the double
  // recursion re-enters with repeated arguments.
  bool cache_here = opts_.memo && info.tag == TermTag::Iter;
  MemoKey key{body.node_id(), a};
  if (cache_here) {
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
  }

  Value result = Value::num(Natural(0));
  if (opts_.intrinsics) {
    Intr op = intrinsic_of(body);
    if (op != Intr::None) {
      ++stats_.intrinsic_hits;
      result = apply_intrinsic(op, a);
      return result;
    }
  }

  switch (info.tag) {
    case TermTag::Zero:
      if (!a.is_num() || a.as_num() != 0)
        throw DomainError("zero map applied outside 1 = {0}");
      result = Value::num(Natural(0));
      break;
    case TermTag::Succ:
      result = Value::num(a.as_num() + 1);
      break;
    case TermTag::Id:
      result = a;
      break;
    case TermTag::Bang:
      result = Value::num(Natural(0));
      break;
    case TermTag::Diag:
      result = Value::pair(a, a);
      break;
    case TermTag::Swap:
      result = Value::pair(a.second(), a.first());
      break;
    case TermTag::ProjL:
      result = a.first();
      break;
    case TermTag::Comp: {
      Value mid = ev_body(*info.child_u, a, depth + 1, info.depth, nullptr);
      result = ev_body(*info.child_v, mid, depth + 1, info.depth, nullptr);
      break;
    }
    case TermTag::Cyl:
      result = Value::pair(a.first(),
                           ev_body(*info.child_v, a.second(), depth + 1, info.depth, nullptr));
      break;
    case TermTag::Iter: {
      const Value& b = a.first();
      const Natural& n = a.second().as_num();
      const Code& u = *info.child_v;
      if (n == 0) {
        result = b;
        break;
      }
      if (!opts_.memo) {
        require_iter_budget(n);
        Value state = b;
        for (Natural i = 0; i < n; ++i) {
          if (opts_.instrument) {
            Natural remaining = n - i;
            Natural next = remaining - 1;
            check_measure(info.depth, &remaining, info.depth, &next);
          }
          ++stats_.iterations;
          state = ev_body(u, state, depth + 1, info.depth, &n);
        }
        result = state;
        break;
      }
      // Memoized unfolding: resume from the highest cached iterate of the
      // same node and start state, caching every level on the way up.
      MemoKey fkey{body.node_id(), b};
      Natural k(0);
      Value state = b;
      auto fit = iter_front_.find(fkey);
      if (fit != iter_front_.end() && fit->second.count < n) {
        k = fit->second.count;
        state = fit->second.state;
        ++stats_.memo_hits;
      }
      require_iter_budget(n - k);
      while (k < n) {
        if (opts_.instrument) {
          Natural remaining = n - k;
          Natural next = remaining - 1;
          check_measure(info.depth, &remaining, info.depth, &next);
        }
        ++stats_.iterations;
        state = ev_body(u, state, depth + 1, info.depth, &n);
        ++k;
        memo_.emplace(MemoKey{body.node_id(), Value::pair(b, Value::num(k))}, state);
      }
      iter_front_.insert_or_assign(fkey, IterFront{n, state});
      result = state;
      break;
    }
  }
  if (cache_here) memo_.emplace(std::move(key), result);
  return result;
}

Value SelfEvaluator::ev(const Code& c, const Value& a) {
  Code body = an_.term_body_checked(c);
  const CodeAnalyzer::Info& info = an_.body(body);
  if (!member(a, *info.dom))
    throw DomainError("value " + a.show() + " is not in the domain " + info.dom->show());
  steps_this_call_ = 0;
  return ev_body(body, a, 0, 0, nullptr);
}

int SelfEvaluator::ev_pred(const Code& c, const Natural& n) {
  Value r = ev(c, Value::num(n));
  if (r.is_num()) {
    if (r.as_num() == 0) return 0;
    if (r.as_num() == 1) return 1;
  }
  throw PredicateContractViolation("predicate result is not a bit: " + r.show());
}

std::optional<Value> SelfEvaluator::constant_of_body(const Code& body, int guard) {
  auto it = const_cache_.find(body.node_id());
  if (it != const_cache_.end()) return it->second.second;
  if (guard > 100'000)
    throw DecodeError("constancy analysis exceeds the nesting cap");
  const CodeAnalyzer::Info& info = an_.body(body);
  std::optional<Value> result;
  if (info.valid) {
    try {
      if (*info.dom == Obj::one()) {
        steps_this_call_ = 0;
        result = ev_body(body, Value::num(Natural(0)), 0, 0, nullptr);
      } else if (info.tag == TermTag::Bang) {
        result = Value::num(Natural(0));
      } else if (info.tag == TermTag::Comp) {
        auto cu = constant_of_body(*info.child_u, guard + 1);
        if (cu) {
          steps_this_call_ = 0;
          result = ev_body(*info.child_v, *cu, 0, 0, nullptr);
        }
      }
    } catch (const BudgetExceeded&) {
      result = std::nullopt;  // cannot establish constancy within budget
    }
  }
  const_cache_.emplace(body.node_id(), std::make_pair(body, result));
  return result;
}

std::optional<Value> SelfEvaluator::constant_value(const Code& c) {
  Code body = an_.term_body_checked(c);
  return constant_of_body(body, 0);
}

}  // namespace prcalc
