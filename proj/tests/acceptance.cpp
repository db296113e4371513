// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <prcalc/cantor.hpp>
#include <prcalc/codec.hpp>
#include <prcalc/combinators.hpp>
#include <prcalc/decis.hpp>
#include <prcalc/dio.hpp>
#include <prcalc/errors.hpp>
#include <prcalc/eval.hpp>
#include <prcalc/generate.hpp>
#include <prcalc/selfeval.hpp>

using namespace prcalc;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s - %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct CodedEntry {
  CorpusEntry entry;
  Code code;
};

}  // namespace

int main() {
  const std::uint64_t kSeed = 0;
  const std::uint64_t kTerms = 500;
  const std::uint64_t kInputs = 20;

  GenConfig cfg;
  cfg.max_depth = 6;
  cfg.inputs_per_term = kInputs;
  auto corpus = build_corpus(kSeed, kTerms, cfg);

  std::vector<CodedEntry> coded;
  coded.reserve(corpus.size());
  for (auto& e : corpus) coded.push_back({e, code_of(e.term)});

  // 1. self-evaluation agrees with structural evaluation case by case,
  //    with and without the arithmetic fast paths
  {
    auto t0 = std::chrono::steady_clock::now();
    SelfEvaluator fast;
    EvOptions slow_opts;
    slow_opts.intrinsics = false;
    SelfEvaluator slow(slow_opts);
    std::uint64_t agree = 0, total = 0;
    for (const auto& ce : coded) {
      for (const auto& a : ce.entry.inputs) {
        ++total;
        Value expected = eval(ce.entry.term, a);
        if (fast.ev(ce.code, a) == expected && slow.ev(ce.code, a) == expected) ++agree;
      }
    }
    double secs = seconds_since(t0);
    bool pass = agree == total && total == kTerms * kInputs && secs <= 60.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "evaluation lemma: %llu/%llu agree in %.1f s (limit 60 s)",
                  static_cast<unsigned long long>(agree),
                  static_cast<unsigned long long>(total), secs);
    report(1, pass, buf);
  }

  // 2. the worked example: ev(code(s.s.s), 1) = 4
  {
    Term sss = Term::comp(Term::succ(), Term::comp(Term::succ(), Term::succ()));
    SelfEvaluator sev;
    Value r = sev.ev(code_of(sss), Value::num(Natural(1)));
    report(2, r == Value::num(Natural(4)), "ev(code(s.s.s), 1) = " + r.show());
  }

  // 3. codec roundtrip and depth agreement on the same corpus
  {
    std::uint64_t ok = 0;
    for (const auto& ce : coded)
      if (decode(ce.code) == ce.entry.term && depth_code(ce.code) == bfdepth(ce.entry.term))
        ++ok;
    report(3, ok == coded.size(),
           "decode/code and depth agreement: " + std::to_string(ok) + "/" +
               std::to_string(coded.size()));
  }

  // 4. the pairing bijection, exhaustively at small scale
  {
    std::uint64_t bad = 0;
    for (std::uint64_t n = 0; n < 40'000; ++n) {
      auto [x, y] = cantor_unpair(Natural(n));
      if (cantor_pair(x, y) != n) ++bad;
    }
    for (std::uint64_t x = 0; x < 200; ++x)
      for (std::uint64_t y = 0; y < 200; ++y) {
        auto [a, b] = cantor_unpair(cantor_pair(Natural(x), Natural(y)));
        if (a != x || b != y) ++bad;
      }
    for (std::uint32_t m = 1; m <= 4; ++m)
      for (std::uint64_t n = 0; n < 10'000; ++n)
        if (cantor_m_inv(cantor_m(m, Natural(n))) != n) ++bad;
    report(4, bad == 0, "pairing and tupling roundtrips, failures: " + std::to_string(bad));
  }

  // 5. iterated Horner against naive monomial sums
  {
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<std::uint32_t> dm(1, 4), dexp(0, 5);
    std::uniform_int_distribution<int> dterms(0, 6);
    std::uniform_int_distribution<std::int64_t> dcoef(-20, 20);
    std::uniform_int_distribution<std::uint64_t> dpt(0, 30);
    std::uint64_t bad = 0;
    for (int i = 0; i < 300; ++i) {
      std::uint32_t m = dm(rng);
      Polynomial p;
      p.var_count = m;
      int tcount = dterms(rng);
      for (int t = 0; t < tcount; ++t) {
        std::vector<std::uint32_t> e(m);
        std::uint32_t total = 0;
        for (auto& x : e) { x = dexp(rng); total += x; }
        if (total > 5) continue;
        Integer c(static_cast<long>(dcoef(rng)));
        if (c == 0) continue;
        auto it = p.terms.find(e);
        if (it == p.terms.end()) p.terms.emplace(e, c);
        else {
          it->second += c;
          if (it->second == 0) p.terms.erase(it);
        }
      }
      std::vector<Natural> pt;
      for (std::uint32_t v = 0; v < m; ++v) pt.emplace_back(dpt(rng));
      // independent oracle: plain monomial sum
      Integer naive = 0;
      for (const auto& [exps, coeff] : p.terms) {
        Integer mono = coeff;
        for (std::size_t v = 0; v < exps.size(); ++v) {
          Integer powed;
          mpz_pow_ui(powed.get_mpz_t(), pt[v].get_mpz_t(), exps[v]);
          mono *= powed;
        }
        naive += mono;
      }
      if (horner_eval(p, pt) != naive) ++bad;
    }
    report(5, bad == 0, "horner vs naive on 300 random polynomials, discrepancies: " +
                            std::to_string(bad));
  }

  // 6. compiler soundness: psi(n) = 0 exactly at encoded solutions
  {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t bad = 0, checked = 0;
    for (const char* text : {"x1^2 = 4", "x1^2 - 2*x2^2 = 1", "x1 + 1 = 0"}) {
      DioSystem d = parse_dio(text);
      Code psi = compile_predicate(d);
      EvOptions unbounded;  // values reach ~1e8 here; the default budget is desk-scale
      unbounded.budget.max_iteration_steps = 0;
      SelfEvaluator sev(unbounded);
      for (std::uint64_t n = 0; n <= 10'000; ++n) {
        auto tuple = cantor_m(d.var_count, Natural(n));
        bool solves = true;
        for (const auto& eq : d.equations)
          if (horner_eval(eq.lhs, tuple) != horner_eval(eq.rhs, tuple)) solves = false;
        if (sev.ev_pred(psi, Natural(n)) != (solves ? 0 : 1)) ++bad;
        ++checked;
      }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "compiled predicates vs brute force on %llu cases, disagreements: %llu"
                  " (%.1f s)",
                  static_cast<unsigned long long>(checked),
                  static_cast<unsigned long long>(bad), seconds_since(t0));
    report(6, bad == 0, buf);
  }

  // 7. the race behavior matrix, three identical runs
  {
    bool pass = true;
    std::string note;
    std::vector<std::vector<DecisOutcome>> runs;
    Natural fuel(100'000);
    DecisOptions dopts;
    dopts.ev.budget.max_iteration_steps = 0;
    for (int run = 0; run < 3; ++run) {
      std::vector<DecisOutcome> outcomes;
      {
        DecisEngine eng(dopts);
        Code square = compile_predicate(parse_dio("x1^2 = 4"));
        outcomes.push_back(eng.decis(square, Enumerator::empty(), fuel));
      }
      {
        DecisEngine eng(dopts);
        Code pell = compile_predicate(parse_dio("x1^2 - 2*x2^2 = 1"));
        outcomes.push_back(eng.decis(pell, Enumerator::empty(), fuel));
      }
      {
        DecisEngine eng(dopts);
        Code unsat = compile_predicate(parse_dio("x1 + 1 = 0"));
        outcomes.push_back(eng.decis(unsat, Enumerator::empty(), fuel));
      }
      {
        // hand-built predicate small enough for the omniscient enumeration
        DecisEngine eng(dopts);
        Code tiny = code_of(Term::comp(numeral(1), Term::bang(Obj::nat())));
        Natural v = tiny.to_natural(64);
        outcomes.push_back(eng.decis(tiny, Enumerator::omniscient(), v + 1));
      }
      runs.push_back(std::move(outcomes));
    }
    auto square_hit = brute_force_search(parse_dio("x1^2 = 4"), Natural(10'000));
    auto pell_hit = brute_force_search(parse_dio("x1^2 - 2*x2^2 = 1"), Natural(10'000));
    const auto& r = runs[0];
    if (r[0].kind != DecisOutcome::Kind::Counterexample || r[0].index != square_hit->index) {
      pass = false;
      note += "square outcome wrong; ";
    }
    if (r[1].kind != DecisOutcome::Kind::Counterexample || r[1].index != pell_hit->index) {
      pass = false;
      note += "pell outcome wrong; ";
    }
    if (r[2].kind != DecisOutcome::Kind::FuelExhausted || r[2].index != fuel) {
      pass = false;
      note += "unsat should exhaust fuel; ";
    }
    Natural tiny_value =
        code_of(Term::comp(numeral(1), Term::bang(Obj::nat()))).to_natural(64);
    if (r[3].kind != DecisOutcome::Kind::Theorem || r[3].index != tiny_value) {
      pass = false;
      note += "omniscient theorem index is not the code value; ";
    }
    if (!(runs[0] == runs[1] && runs[1] == runs[2])) {
      pass = false;
      note += "outcomes differ between runs; ";
    }
    if (note.empty())
      note = "counterexamples minimal, unsat exhausts fuel 100000, theorem k = code value "
             "= " + tiny_value.get_str() + ", 3 runs identical";
    report(7, pass, note);
  }

  // 8. measure decrease instrumentation over the corpus
  {
    EvOptions opts;
    opts.instrument = true;
    opts.intrinsics = false;
    opts.memo = false;
    SelfEvaluator sev(opts);
    for (const auto& ce : coded)
      for (const auto& a : ce.entry.inputs) (void)sev.ev(ce.code, a);
    const EvStats& st = sev.stats();
    char buf[160];
    std::snprintf(buf, sizeof buf, "measure checks: %llu, violations: %llu",
                  static_cast<unsigned long long>(st.measure_checks),
                  static_cast<unsigned long long>(st.measure_violations));
    report(8, st.measure_checks > 10'000 && st.measure_violations == 0, buf);
  }

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all criteria passed\n");
  return failures ? 1 : 0;
}
