#include "prcalc/decis.hpp"

#include <chrono>
#include <future>

#include "prcalc/cantor.hpp"
#include "prcalc/codec.hpp"
#include "prcalc/errors.hpp"

namespace prcalc {

DecisEngine::DecisEngine(DecisOptions opts) : opts_(opts), ev_(opts.ev) {}

std::optional<int> DecisEngine::constant_bit(const Code& p) {
  auto v = ev_.constant_value(p);
  if (!v) return std::nullopt;
  if (v->is_num()) {
    if (v->as_num() == 0) return 0;
    if (v->as_num() == 1) return 1;
  }
  throw PredicateContractViolation("constant predicate value is not a bit: " + v->show());
}

bool DecisEngine::holds_up_to(const Code& p, const Natural& bound) {
  if (auto bit = constant_bit(p)) return *bit == 1;
  if (bound > opts_.literal_cap)
    throw EngineLimitError("bound check needs " + bound.get_str() +
                           " literal steps, cap is " + std::to_string(opts_.literal_cap));
  for (Natural n = 0; n <= bound; ++n)
    if (ev_.ev_pred(p, n) == 0) return false;
  return true;
}

std::optional<Natural> DecisEngine::mu_ex(const Code& p, const Natural& fuel) {
  if (!is_pred_code(p)) throw DomainError("mu_ex requires a predicate code");
  if (auto bit = constant_bit(p)) {
    if (*bit == 1) return std::nullopt;
    return Natural(0);
  }
  if (fuel > opts_.literal_cap)
    throw EngineLimitError("mu_ex fuel " + fuel.get_str() + " exceeds the literal cap");
  for (Natural n = 0; n <= fuel; ++n)
    if (ev_.ev_pred(p, n) == 0) return n;
  return std::nullopt;
}

bool DecisEngine::emits_at(const Enumerator& e, const Natural& k, const Code& p) {
  switch (e.strategy) {
    case Enumerator::Strategy::Empty:
      return false;
    case Enumerator::Strategy::Omniscient:
      return p.equals_natural(k);
    case Enumerator::Strategy::BoundedChecker: {
      auto [c, i] = cantor_unpair(k);
      if (!p.equals_natural(c)) return false;
      Natural bound = i;
      if (!e.bound_schedule.empty()) {
        std::size_t idx = fits_u64(i) && to_u64(i) < e.bound_schedule.size()
                              ? static_cast<std::size_t>(to_u64(i))
                              : e.bound_schedule.size() - 1;
        bound = e.bound_schedule[idx];
      }
      return holds_up_to(p, bound);
    }
  }
  return false;
}

std::optional<Natural> DecisEngine::mu_thm(const Code& p, const Enumerator& e,
                                           const Natural& fuel) {
  if (!is_pred_code(p)) throw DomainError("mu_thm requires a predicate code");
  switch (e.strategy) {
    case Enumerator::Strategy::Empty:
      return std::nullopt;
    case Enumerator::Strategy::Omniscient: {
      // thm(k) = k, so the emission index is the code value itself.
      if (p.leq_natural(fuel)) return p.to_natural(bit_length(fuel) + 2);
      return std::nullopt;
    }
    case Enumerator::Strategy::BoundedChecker: {
      // Only steps k with unpair(k) = (p, B) can emit p; scan the bounds.
      if (p.bits_lower_bound() > bit_length(fuel)) return std::nullopt;
      Natural pv;
      try {
        pv = p.to_natural(bit_length(fuel) + 2);
      } catch (const CodeSizeError&) {
        return std::nullopt;
      }
      for (Natural b = 0;; ++b) {
        Natural k = cantor_pair(pv, b);
        if (k > fuel) return std::nullopt;
        Natural bound = b;
        if (!e.bound_schedule.empty()) {
          std::size_t idx = fits_u64(b) && to_u64(b) < e.bound_schedule.size()
                                ? static_cast<std::size_t>(to_u64(b))
                                : e.bound_schedule.size() - 1;
          bound = e.bound_schedule[idx];
        }
        if (holds_up_to(p, bound)) return k;
      }
    }
  }
  return std::nullopt;
}

DecisOutcome DecisEngine::decis(const Code& p, const Enumerator& e, const Natural& fuel) {
  if (!is_pred_code(p)) throw DomainError("decis requires a predicate code");

  // Provably constant predicates admit a closed form for the whole race:
  // constant 0 loses at step 0, constant 1 never yields a counterexample,
  // so only the emission race remains. Identical to the literal loop.
  if (auto bit = constant_bit(p)) {
    if (*bit == 0) return {DecisOutcome::Kind::Counterexample, Natural(0)};
    if (auto k = mu_thm(p, e, fuel)) return {DecisOutcome::Kind::Theorem, *k};
    return {DecisOutcome::Kind::FuelExhausted, fuel};
  }

  if (fuel > opts_.literal_cap)
    throw EngineLimitError("decis fuel " + fuel.get_str() +
                           " exceeds the literal cap and no closed form applies");
  for (Natural t = 0; t <= fuel; ++t) {
    if (ev_.ev_pred(p, t) == 0) return {DecisOutcome::Kind::Counterexample, t};
    if (emits_at(e, t, p)) return {DecisOutcome::Kind::Theorem, t};
  }
  return {DecisOutcome::Kind::FuelExhausted, fuel};
}

std::string outcome_name(DecisOutcome::Kind k) {
  switch (k) {
    case DecisOutcome::Kind::Counterexample: return "counterexample";
    case DecisOutcome::Kind::Theorem: return "theorem";
    case DecisOutcome::Kind::FuelExhausted: return "fuel_exhausted";
  }
  return "?";
}

namespace {

ReportRow run_one(const ReportInput& input, const Enumerator& e, const Natural& fuel,
                  const ReportOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  DecisEngine engine(opts.decis);
  Code p = compile_predicate(input.system, opts.compile);
  DecisOutcome outcome = engine.decis(p, e, fuel);

  ReportRow row;
  row.system = input.label;
  row.outcome = outcome;
  row.steps = engine.evaluator().stats().calls;
  row.soundness_flag = false;

  auto oracle = brute_force_search(input.system, opts.oracle_budget);
  switch (outcome.kind) {
    case DecisOutcome::Kind::Counterexample: {
      // The witness must actually solve the system.
      row.witness_tuple = cantor_m(input.system.var_count, outcome.index);
      bool solves = true;
      for (const auto& eq : input.system.equations)
        if (horner_eval(eq.lhs, row.witness_tuple) != horner_eval(eq.rhs, row.witness_tuple))
          solves = false;
      row.soundness_flag = !solves;
      break;
    }
    case DecisOutcome::Kind::Theorem:
      // "No solution" was proclaimed; a found solution exposes the enumerator.
      row.soundness_flag = oracle.has_value();
      break;
    case DecisOutcome::Kind::FuelExhausted:
      break;
  }
  auto end = std::chrono::steady_clock::now();
  row.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count());
  return row;
}

}  // namespace

std::vector<ReportRow> decision_report(const std::vector<ReportInput>& systems,
                                       const Enumerator& e, const Natural& fuel,
                                       const ReportOptions& opts) {
  std::vector<ReportRow> rows;
  if (systems.empty()) return rows;
  if (opts.parallel && systems.size() > 1) {
    std::vector<std::future<ReportRow>> futures;
    futures.reserve(systems.size());
    for (const auto& s : systems) {
      const ReportInput* ps = &s;
      futures.push_back(std::async(std::launch::async, [ps, &e, &fuel, &opts]() {
        return run_one(*ps, e, fuel, opts);
      }));
    }
    for (auto& f : futures) rows.push_back(f.get());
  } else {
    for (const auto& s : systems) rows.push_back(run_one(s, e, fuel, opts));
  }
  return rows;
}

}  // namespace prcalc
