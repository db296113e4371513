#include <benchmark/benchmark.h>

#include <prcalc/cantor.hpp>
#include <prcalc/codec.hpp>
#include <prcalc/combinators.hpp>
#include <prcalc/decis.hpp>
#include <prcalc/dio.hpp>
#include <prcalc/eval.hpp>
#include <prcalc/generate.hpp>
#include <prcalc/selfeval.hpp>

using namespace prcalc;

namespace {

const std::vector<CorpusEntry>& bench_corpus() {
  static const auto corpus = build_corpus(42, 50);
  return corpus;
}

void BM_CantorPairSmall(benchmark::State& state) {
  Natural x(123456), y(654321);
  for (auto _ : state) benchmark::DoNotOptimize(cantor_pair(x, y));
}
BENCHMARK(BM_CantorPairSmall);

void BM_CantorUnpairBig(benchmark::State& state) {
  Natural n("123456789123456789123456789123456789");
  for (auto _ : state) benchmark::DoNotOptimize(cantor_unpair(n));
}
BENCHMARK(BM_CantorUnpairBig);

void BM_EvalCorpus(benchmark::State& state) {
  const auto& corpus = bench_corpus();
  for (auto _ : state) {
    for (const auto& e : corpus)
      for (const auto& a : e.inputs) benchmark::DoNotOptimize(eval(e.term, a));
  }
}
BENCHMARK(BM_EvalCorpus);

void BM_SelfEvalCorpus(benchmark::State& state) {
  const auto& corpus = bench_corpus();
  std::vector<Code> codes;
  for (const auto& e : corpus) codes.push_back(code_of(e.term));
  EvOptions opts;
  opts.intrinsics = state.range(0) != 0;
  for (auto _ : state) {
    SelfEvaluator sev(opts);
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (const auto& a : corpus[i].inputs) benchmark::DoNotOptimize(sev.ev(codes[i], a));
  }
}
BENCHMARK(BM_SelfEvalCorpus)->Arg(0)->Arg(1);

void BM_CodeOfStdlibPow(benchmark::State& state) {
  const Term& pow = std_terms().pow;
  for (auto _ : state) benchmark::DoNotOptimize(code_of(pow));
}
BENCHMARK(BM_CodeOfStdlibPow);

void BM_CompilePell(benchmark::State& state) {
  DioSystem pell = parse_dio("x1^2 - 2*x2^2 = 1");
  for (auto _ : state) benchmark::DoNotOptimize(compile_predicate(pell));
}
BENCHMARK(BM_CompilePell);

void BM_EvPredPellSweep(benchmark::State& state) {
  Code psi = compile_predicate(parse_dio("x1^2 - 2*x2^2 = 1"));
  EvOptions opts;
  opts.budget.max_iteration_steps = 0;
  std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    SelfEvaluator sev(opts);
    std::uint64_t bits = 0;
    for (std::uint64_t i = 0; i <= n; ++i) bits += sev.ev_pred(psi, Natural(i));
    benchmark::DoNotOptimize(bits);
  }
  state.SetItemsProcessed(state.iterations() * (n + 1));
}
BENCHMARK(BM_EvPredPellSweep)->Arg(100)->Arg(1000);

void BM_DecisRaceUnsat(benchmark::State& state) {
  Code psi = compile_predicate(parse_dio("x1 + 1 = 0"));
  for (auto _ : state) {
    DecisEngine eng;
    benchmark::DoNotOptimize(eng.decis(psi, Enumerator::empty(), Natural(1000)));
  }
}
BENCHMARK(BM_DecisRaceUnsat);

void BM_BruteForcePell(benchmark::State& state) {
  DioSystem pell = parse_dio("x1^2 - 2*x2^2 = 1");
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_search(pell, Natural(5000)));
}
BENCHMARK(BM_BruteForcePell);

}  // namespace

BENCHMARK_MAIN();
