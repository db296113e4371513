#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prcalc/code.hpp"
#include "prcalc/dio.hpp"
#include "prcalc/natural.hpp"
#include "prcalc/selfeval.hpp"

namespace prcalc {

// Theorem enumeration strategies.
//  - Omniscient: thm(k) = k, every code appears ("everything is provable").
//  - BoundedChecker: step k unpairs to (code, i); the code is emitted when
//    it is a valid predicate code and holds for all n <= B, B drawn from the
//    bound schedule at i (identity schedule when empty). Unsound as a proof
//    system for universal claims; a simulation device.
//  - Empty: never emits.
struct Enumerator {
  enum class Strategy { Omniscient, BoundedChecker, Empty };
  Strategy strategy = Strategy::Empty;
  std::vector<Natural> bound_schedule;

  static Enumerator omniscient() { return {Strategy::Omniscient, {}}; }
  static Enumerator empty() { return {Strategy::Empty, {}}; }
  static Enumerator bounded(std::vector<Natural> schedule = {}) {
    return {Strategy::BoundedChecker, std::move(schedule)};
  }
};

struct DecisOutcome {
  enum class Kind { Counterexample, Theorem, FuelExhausted };
  Kind kind;
  Natural index;  // counterexample n / theorem step k / the spent fuel

  bool operator==(const DecisOutcome& o) const {
    return kind == o.kind && index == o.index;
  }
};

struct DecisOptions {
  EvOptions ev;
  // Hard cap on literal race steps; larger fuels are only served when a
  // closed form applies (provably constant predicates, emission indices).
  std::uint64_t literal_cap = 100'000'000;
};

class DecisEngine {
 public:
  explicit DecisEngine(DecisOptions opts = {});

  // Least n <= fuel with ev(p, n) = 0, the minimal counterexample.
  std::optional<Natural> mu_ex(const Code& p, const Natural& fuel);

  // Least k <= fuel at which the enumerator emits p.
  std::optional<Natural> mu_thm(const Code& p, const Enumerator& e, const Natural& fuel);

  // The race: at step t first test for a counterexample at t, then for an
  // emission at t.
  DecisOutcome decis(const Code& p, const Enumerator& e, const Natural& fuel);

  SelfEvaluator& evaluator() { return ev_; }

 private:
  bool emits_at(const Enumerator& e, const Natural& k, const Code& p);
  bool holds_up_to(const Code& p, const Natural& bound);  // ev_pred = 1 on [0, bound]
  std::optional<int> constant_bit(const Code& p);

  DecisOptions opts_;
  SelfEvaluator ev_;
};

struct ReportInput {
  std::string label;
  DioSystem system;
};

struct ReportRow {
  std::string system;
  DecisOutcome outcome;
  std::vector<Natural> witness_tuple;  // counterexample rows only
  std::uint64_t steps;                 // evaluator calls consumed
  std::uint64_t millis;
  bool soundness_flag;                 // outcome contradicts the ground-truth oracle
};

struct ReportOptions {
  DecisOptions decis;
  CompileOptions compile;
  Natural oracle_budget{10'000};
  bool parallel = true;
};

// Runs the race per system and cross-checks every outcome against the
// brute-force oracle; disagreements are flagged, not hidden.
std::vector<ReportRow> decision_report(const std::vector<ReportInput>& systems,
                                       const Enumerator& e, const Natural& fuel,
                                       const ReportOptions& opts = {});

std::string report_to_json(const std::vector<ReportRow>& rows);
std::string outcome_name(DecisOutcome::Kind k);

}  // namespace prcalc
