#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>

#include "prcalc/codec.hpp"
#include "prcalc/eval.hpp"
#include "prcalc/value.hpp"

namespace prcalc {

struct EvOptions {
  EvalBudget budget;
  // Evaluate codes of the named stdlib combinators by exact arithmetic.
  // Observationally equal to the structural recursion (covered by tests);
  // required to keep long predicate sweeps tractable.
  bool intrinsics = true;
  // Cache results per (code node, argument). Semantically invisible.
  bool memo = true;
  // Verify that every recursive call strictly decreases the lexicographic
  // measure (operator depth, remaining iterations).
  bool instrument = false;
};

struct EvStats {
  std::uint64_t calls = 0;
  std::uint64_t iterations = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t intrinsic_hits = 0;
  std::uint64_t measure_checks = 0;
  std::uint64_t measure_violations = 0;
};

// Evaluation of coded maps on values, by double recursion on the code with
// the operator depth as principal parameter. Dispatch reads the code
// numbers only (tag arithmetic via unpairing); terms are never decoded.
class SelfEvaluator {
 public:
  explicit SelfEvaluator(EvOptions opts = {});

  // DecodeError if c is invalid, DomainError if a is outside the domain,
  // BudgetExceeded on blown budgets.
  Value ev(const Code& c, const Value& a);

  // ev projected to a bit: 1 means the predicate holds at n, 0 means n is a
  // counterexample. PredicateContractViolation if the result is not 0 or 1.
  // Callers are responsible for is_pred_code(c).
  int ev_pred(const Code& c, const Natural& n);

  // The provably constant value of the coded map, when the code factors
  // through 1 along its composition spine (any map out of 1 is constant).
  // nullopt when constancy cannot be established syntactically.
  std::optional<Value> constant_value(const Code& c);

  const EvOptions& options() const { return opts_; }
  const EvStats& stats() const { return stats_; }
  void reset_stats() { stats_ = EvStats{}; }
  void clear_memo();

 private:
  enum class Intr : std::uint8_t {
    None, Add, Pred, Sub, Not, Sign, Or, And, Eq, Mult, Pow
  };

  struct MemoKey {
    const void* node;
    Value arg;
    bool operator==(const MemoKey& o) const { return node == o.node && arg == o.arg; }
  };
  struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const;
  };
  struct IterFront {
    Natural count;
    Value state;
  };

  Value ev_body(const Code& body, const Value& a, std::uint64_t depth,
                std::uint64_t parent_depth, const Natural* parent_remaining);
  void check_measure(std::uint64_t parent_depth, const Natural* parent_remaining,
                     std::uint64_t child_depth, const Natural* child_remaining);
  Intr intrinsic_of(const Code& body);
  Value apply_intrinsic(Intr op, const Value& a);
  void require_iter_budget(const Natural& steps) const;
  std::optional<Value> constant_of_body(const Code& body, int guard);

  EvOptions opts_;
  CodeAnalyzer an_;
  EvStats stats_;
  std::uint64_t steps_this_call_ = 0;
  std::unordered_map<MemoKey, Value, MemoKeyHash> memo_;
  std::unordered_map<MemoKey, IterFront, MemoKeyHash> iter_front_;
  std::unordered_map<const void*, Intr> intr_cache_;
  std::unordered_map<const void*, std::pair<Code, std::optional<Value>>> const_cache_;
};

}  // namespace prcalc
