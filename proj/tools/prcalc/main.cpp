#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <prcalc/cantor.hpp>
#include <prcalc/codec.hpp>
#include <prcalc/combinators.hpp>
#include <prcalc/decis.hpp>
#include <prcalc/dio.hpp>
#include <prcalc/errors.hpp>
#include <prcalc/eval.hpp>
#include <prcalc/generate.hpp>
#include <prcalc/selfeval.hpp>
#include <prcalc/term_text.hpp>

using namespace prcalc;
using nlohmann::json;

namespace {

constexpr std::uint64_t kPrintCapBits = 1 << 22;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Natural env_natural(const char* name, Natural fallback) {
  if (const char* v = std::getenv(name)) return natural_from_string(v);
  return fallback;
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  if (const char* v = std::getenv(name)) return to_u64(natural_from_string(v));
  return fallback;
}

struct GlobalConfig {
  Natural fuel{100'000};
  EvalBudget budget;
  bool json = false;
};

void emit(const GlobalConfig& cfg, const json& j, const std::string& text) {
  if (cfg.json) std::cout << j.dump(2) << "\n";
  else std::cout << text << "\n";
}

Enumerator parse_enumerator(const std::string& name) {
  if (name == "omniscient") return Enumerator::omniscient();
  if (name == "bounded") return Enumerator::bounded();
  if (name == "empty") return Enumerator::empty();
  throw DomainError("unknown enumerator: " + name);
}

std::string tuple_text(const std::vector<Natural>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += t[i].get_str();
  }
  return s + ")";
}

int run_eval(const GlobalConfig& cfg, const std::string& term_file,
             const std::string& literal, bool trace) {
  Term t = parse_term(slurp(term_file));
  Value a = Value::parse(literal);
  EvalStats stats;
  Value r = eval(t, a, cfg.budget, &stats);
  json j{{"value", r.show()}, {"steps", stats.steps}};
  std::string text = r.show();
  if (trace) text += "\nsteps: " + std::to_string(stats.steps);
  emit(cfg, j, text);
  return 0;
}

int run_self_eval(const GlobalConfig& cfg, const std::string& code_text,
                  const std::string& term_file, const std::string& literal, bool trace) {
  Code c = !code_text.empty() ? Code::from_natural(natural_from_string(code_text))
                              : code_of(parse_term(slurp(term_file)));
  Value a = Value::parse(literal);
  EvOptions opts;
  opts.budget = cfg.budget;
  SelfEvaluator sev(opts);
  Value r = sev.ev(c, a);
  json j{{"value", r.show()}, {"steps", sev.stats().calls}};
  std::string text = r.show();
  if (trace) text += "\nsteps: " + std::to_string(sev.stats().calls);
  emit(cfg, j, text);
  return 0;
}

int run_code(const GlobalConfig& cfg, const std::string& term_file) {
  Code c = code_of(parse_term(slurp(term_file)));
  std::string dec = c.to_decimal(kPrintCapBits);
  emit(cfg, json{{"code", dec}}, dec);
  return 0;
}

int run_decode(const GlobalConfig& cfg, const std::string& code_text) {
  Term t = decode(Code::from_natural(natural_from_string(code_text)));
  emit(cfg, json{{"term", t.show()}}, t.show());
  return 0;
}

int run_compile(const GlobalConfig& cfg, const std::string& file, bool emit_term,
                bool emit_code, std::uint64_t max_nodes) {
  DioSystem d = parse_dio(slurp(file));
  CompileOptions copts;
  copts.max_nodes = max_nodes;
  Term t = compile_predicate_term(d, copts);
  Code c = code_of(t);
  if (emit_term) {
    emit(cfg, json{{"term", t.show()}}, t.show());
    return 0;
  }
  if (emit_code) {
    std::string dec = c.to_decimal(kPrintCapBits);
    emit(cfg, json{{"code", dec}}, dec);
    return 0;
  }
  json j{{"variables", d.var_count},
         {"equations", d.equations.size()},
         {"depth", depth_code(c)},
         {"code_bits_at_least", c.bits_lower_bound()},
         {"predicate", is_pred_code(c)}};
  std::string text = "variables: " + std::to_string(d.var_count) +
                     "\nequations: " + std::to_string(d.equations.size()) +
                     "\ndepth: " + std::to_string(depth_code(c)) +
                     "\ncode bits (at least): " + std::to_string(c.bits_lower_bound()) +
                     "\npredicate code: " + (is_pred_code(c) ? "yes" : "no");
  emit(cfg, j, text);
  return 0;
}

int run_solve(const GlobalConfig& cfg, const std::string& file, const Natural& budget) {
  DioSystem d = parse_dio(slurp(file));
  auto hit = brute_force_search(d, budget);
  if (!hit) {
    emit(cfg, json{{"witness", nullptr}}, "none");
    return 0;
  }
  json tuple = json::array();
  for (const auto& x : hit->tuple) tuple.push_back(x.get_str());
  emit(cfg, json{{"witness", tuple}, {"index", hit->index.get_str()}},
       "witness " + tuple_text(hit->tuple) + " index " + hit->index.get_str());
  return 0;
}

int run_decis(const GlobalConfig& cfg, const std::string& file,
              const std::string& enumerator, const Natural& fuel,
              const Natural& oracle_budget) {
  ReportOptions opts;
  opts.decis.ev.budget = cfg.budget;
  opts.oracle_budget = oracle_budget;
  std::vector<ReportInput> inputs{{file, parse_dio(slurp(file))}};
  auto rows = decision_report(inputs, parse_enumerator(enumerator), fuel, opts);
  const ReportRow& row = rows.at(0);
  if (cfg.json) {
    std::cout << report_to_json(rows) << "\n";
    return 0;
  }
  std::string text = outcome_name(row.outcome.kind);
  switch (row.outcome.kind) {
    case DecisOutcome::Kind::Counterexample:
      text += " n=" + row.outcome.index.get_str() + " tuple=" + tuple_text(row.witness_tuple);
      break;
    case DecisOutcome::Kind::Theorem:
      text += " k=" + row.outcome.index.get_str();
      break;
    case DecisOutcome::Kind::FuelExhausted:
      text += " fuel=" + row.outcome.index.get_str();
      break;
  }
  if (row.soundness_flag) text += "\nSOUNDNESS_VIOLATION";
  std::cout << text << "\n";
  return 0;
}

int run_report(const GlobalConfig& cfg, const std::vector<std::string>& files,
               const std::string& enumerator, const Natural& fuel,
               const Natural& oracle_budget) {
  ReportOptions opts;
  opts.decis.ev.budget = cfg.budget;
  opts.oracle_budget = oracle_budget;
  std::vector<ReportInput> inputs;
  for (const auto& f : files) inputs.push_back({f, parse_dio(slurp(f))});
  auto rows = decision_report(inputs, parse_enumerator(enumerator), fuel, opts);
  if (cfg.json) {
    std::cout << report_to_json(rows) << "\n";
    return 0;
  }
  for (const auto& row : rows) {
    std::string line = row.system + ": " + outcome_name(row.outcome.kind);
    if (row.outcome.kind == DecisOutcome::Kind::Counterexample)
      line += " n=" + row.outcome.index.get_str() + " tuple=" + tuple_text(row.witness_tuple);
    if (row.outcome.kind == DecisOutcome::Kind::Theorem)
      line += " k=" + row.outcome.index.get_str();
    line += " steps=" + std::to_string(row.steps) + " millis=" + std::to_string(row.millis);
    if (row.soundness_flag) line += " SOUNDNESS_VIOLATION";
    std::cout << line << "\n";
  }
  return 0;
}

int run_selftest(const GlobalConfig& cfg, std::uint64_t terms, std::uint64_t depth,
                 std::uint64_t seed) {
  GenConfig gen;
  gen.max_depth = depth;
  auto corpus = build_corpus(seed, terms, gen);
  EvOptions opts;
  opts.budget = cfg.budget;
  SelfEvaluator sev(opts);
  std::uint64_t lemma_ok = 0, codec_ok = 0;
  for (const auto& entry : corpus) {
    Code c = code_of(entry.term);
    bool all = true;
    for (const auto& a : entry.inputs)
      if (sev.ev(c, a) != eval(entry.term, a, cfg.budget)) all = false;
    lemma_ok += all;
    codec_ok += decode(c) == entry.term && depth_code(c) == bfdepth(entry.term);
  }
  json j{{"evaluation_lemma", {{"agree", lemma_ok}, {"total", corpus.size()}}},
         {"codec_roundtrip", {{"agree", codec_ok}, {"total", corpus.size()}}}};
  std::string text = "evaluation-lemma: " + std::to_string(lemma_ok) + "/" +
                     std::to_string(corpus.size()) + " agree\ncodec-roundtrip: " +
                     std::to_string(codec_ok) + "/" + std::to_string(corpus.size()) +
                     " agree";
  emit(cfg, j, text);
  return lemma_ok == corpus.size() && codec_ok == corpus.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"primitive recursive map calculus with self-evaluation and a "
               "diophantine decision race"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  cfg.fuel = env_natural("DECIS_FUEL", Natural(100'000));
  cfg.budget.max_iteration_steps = env_u64("EVAL_BUDGET", 1'000'000);
  app.add_flag("--json", cfg.json, "emit JSON instead of text");
  app.add_option("--iter-budget", cfg.budget.max_iteration_steps,
                 "iteration steps per iter node, 0 = unlimited (env EVAL_BUDGET)");
  app.add_option("--depth-budget", cfg.budget.max_recursion_depth,
                 "evaluation recursion depth cap");

  std::string term_file, code_text, literal, dio_file, enumerator = "empty";
  std::vector<std::string> dio_files;
  std::string fuel_text, budget_text, oracle_text = "10000";
  bool trace = false, emit_term = false, emit_code = false;
  std::uint64_t terms = 500, depth = 6, seed = 0, max_nodes = 1'000'000;

  auto* c_eval = app.add_subcommand("eval", "evaluate a term file on a value");
  c_eval->add_option("--term", term_file, "term file")->required();
  c_eval->add_option("--value", literal, "value literal")->required();
  c_eval->add_flag("--trace", trace, "print a step count");

  auto* c_self = app.add_subcommand("self-eval", "evaluate a Goedel code on a value");
  c_self->add_option("--code", code_text, "code in decimal or 0x hex");
  c_self->add_option("--term", term_file, "term file to encode first");
  c_self->add_option("--value", literal, "value literal")->required();
  c_self->add_flag("--trace", trace, "print a step count");

  auto* c_code = app.add_subcommand("code", "print the Goedel code of a term file");
  c_code->add_option("--term", term_file, "term file")->required();

  auto* c_decode = app.add_subcommand("decode", "print the term of a Goedel code");
  c_decode->add_option("--code", code_text, "code in decimal or 0x hex")->required();

  auto* c_compile = app.add_subcommand("compile-dio", "compile a system to a predicate");
  c_compile->add_option("--file", dio_file, "system file")->required();
  c_compile->add_flag("--emit-term", emit_term, "print the predicate term");
  c_compile->add_flag("--emit-code", emit_code, "print the predicate code in decimal");
  c_compile->add_option("--max-nodes", max_nodes, "construction cap");

  auto* c_solve = app.add_subcommand("solve", "brute-force search for a solution");
  c_solve->add_option("--file", dio_file, "system file")->required();
  c_solve->add_option("--budget", budget_text, "tuple indices to scan")->required();

  auto* c_decis = app.add_subcommand("decis", "race a counterexample against a proof");
  c_decis->add_option("--file", dio_file, "system file")->required();
  c_decis->add_option("--enumerator", enumerator, "omniscient|bounded|empty")->required();
  c_decis->add_option("--fuel", fuel_text, "race steps (default from DECIS_FUEL)");
  c_decis->add_option("--oracle-budget", oracle_text, "ground-truth search budget");

  auto* c_report = app.add_subcommand("report", "decis over several systems");
  c_report->add_option("--file", dio_files, "system files")->required();
  c_report->add_option("--enumerator", enumerator, "omniscient|bounded|empty");
  c_report->add_option("--fuel", fuel_text, "race steps (default from DECIS_FUEL)");
  c_report->add_option("--oracle-budget", oracle_text, "ground-truth search budget");

  auto* c_selftest = app.add_subcommand("selftest", "run the agreement corpus");
  c_selftest->add_option("--terms", terms, "corpus size");
  c_selftest->add_option("--depth", depth, "depth bound");
  c_selftest->add_option("--seed", seed, "corpus seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return 2;
  }

  try {
    Natural fuel = fuel_text.empty() ? cfg.fuel : natural_from_string(fuel_text);
    Natural oracle = natural_from_string(oracle_text);
    if (c_eval->parsed()) return run_eval(cfg, term_file, literal, trace);
    if (c_self->parsed()) {
      if (code_text.empty() == term_file.empty())
        throw DomainError("self-eval needs exactly one of --code or --term");
      return run_self_eval(cfg, code_text, term_file, literal, trace);
    }
    if (c_code->parsed()) return run_code(cfg, term_file);
    if (c_decode->parsed()) return run_decode(cfg, code_text);
    if (c_compile->parsed()) return run_compile(cfg, dio_file, emit_term, emit_code, max_nodes);
    if (c_solve->parsed()) return run_solve(cfg, dio_file, natural_from_string(budget_text));
    if (c_decis->parsed()) return run_decis(cfg, dio_file, enumerator, fuel, oracle);
    if (c_report->parsed()) return run_report(cfg, dio_files, enumerator, fuel, oracle);
    if (c_selftest->parsed()) return run_selftest(cfg, terms, depth, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
