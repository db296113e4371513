#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "prcalc/eval.hpp"
#include "prcalc/term.hpp"
#include "prcalc/value.hpp"

namespace prcalc {

struct GenConfig {
  std::uint64_t max_depth = 6;
  std::uint32_t max_obj_nesting = 2;
  std::uint64_t value_magnitude = 24;
  std::uint64_t inputs_per_term = 20;
  // Inputs whose structural evaluation exceeds this step count are resampled
  // at a smaller magnitude so a corpus stays desk-scale.
  std::uint64_t eval_step_ceiling = 200'000;
};

// Seeded generator of well-typed terms (top-down with a depth budget,
// uniform constructor choice with bounded retries) and of domain members.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  Obj random_obj(std::uint32_t max_nesting);
  Term random_term(const GenConfig& cfg);
  Term random_term_with_dom(const Obj& dom, std::uint64_t depth_budget,
                            std::uint32_t obj_nesting);
  Value random_member(const Obj& obj, std::uint64_t magnitude);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct CorpusEntry {
  Term term;
  std::vector<Value> inputs;  // members of dom(term), evaluation vetted
};

// Deterministic term/input corpus used by the self-evaluation agreement
// suites and the CLI selftest.
std::vector<CorpusEntry> build_corpus(std::uint64_t seed, std::uint64_t term_count,
                                      const GenConfig& cfg = {});

}  // namespace prcalc
