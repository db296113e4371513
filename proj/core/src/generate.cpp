#include "prcalc/generate.hpp"

#include <stdexcept>

#include "prcalc/errors.hpp"

namespace prcalc {

namespace {

enum class Pick { Basic, Comp, Cyl, Iter };

}  // namespace

Obj TermGen::random_obj(std::uint32_t max_nesting) {
  std::uniform_int_distribution<int> d(0, 9);
  int r = d(rng_);
  if (max_nesting == 0) return r < 3 ? Obj::one() : Obj::nat();
  if (r < 2) return Obj::one();
  if (r < 7) return Obj::nat();
  return Obj::prod(random_obj(max_nesting - 1), random_obj(max_nesting - 1));
}

Term TermGen::random_term_with_dom(const Obj& dom, std::uint64_t depth_budget,
                                   std::uint32_t obj_nesting) {
  std::vector<Pick> picks{Pick::Basic};
  if (depth_budget > 1) {
    picks.push_back(Pick::Comp);
    if (dom.kind() == ObjKind::Prod) {
      picks.push_back(Pick::Cyl);
      if (dom.right().kind() == ObjKind::Nat) picks.push_back(Pick::Iter);
    }
  }
  std::uniform_int_distribution<std::size_t> dp(0, picks.size() - 1);
  switch (picks[dp(rng_)]) {
    case Pick::Basic: {
      std::vector<Term> basics{Term::id(dom), Term::bang(dom), Term::diag(dom)};
      if (dom.kind() == ObjKind::One) basics.push_back(Term::zero());
      if (dom.kind() == ObjKind::Nat) basics.push_back(Term::succ());
      if (dom.kind() == ObjKind::Prod) {
        basics.push_back(Term::swap(dom.left(), dom.right()));
        basics.push_back(Term::projl(dom.left(), dom.right()));
      }
      std::uniform_int_distribution<std::size_t> db(0, basics.size() - 1);
      return basics[db(rng_)];
    }
    case Pick::Comp: {
      Term u = random_term_with_dom(dom, depth_budget - 1, obj_nesting);
      Term v = random_term_with_dom(infer(u).cod, depth_budget - 1, obj_nesting);
      return Term::comp(v, u);
    }
    case Pick::Cyl:
      return Term::cyl(dom.left(),
                       random_term_with_dom(dom.right(), depth_budget - 1, obj_nesting));
    case Pick::Iter: {
      const Obj& a = dom.left();
      // Retry until the body is an endo map; fall back to the identity.
      for (int attempt = 0; attempt < 8; ++attempt) {
        Term u = random_term_with_dom(a, depth_budget - 1, obj_nesting);
        if (infer(u).cod == a) return Term::iter(u);
      }
      return Term::iter(Term::id(a));
    }
  }
  throw std::logic_error("unreachable");
}

Term TermGen::random_term(const GenConfig& cfg) {
  Obj dom = random_obj(cfg.max_obj_nesting);
  return random_term_with_dom(dom, cfg.max_depth, cfg.max_obj_nesting);
}

Value TermGen::random_member(const Obj& obj, std::uint64_t magnitude) {
  switch (obj.kind()) {
    case ObjKind::One:
      return Value::num(Natural(0));
    case ObjKind::Nat: {
      std::uniform_int_distribution<std::uint64_t> d(0, magnitude);
      return Value::num(d(rng_));
    }
    case ObjKind::Prod: {
      Value a = random_member(obj.left(), magnitude);
      return Value::pair(std::move(a), random_member(obj.right(), magnitude));
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<CorpusEntry> build_corpus(std::uint64_t seed, std::uint64_t term_count,
                                      const GenConfig& cfg) {
  TermGen gen(seed);
  std::vector<CorpusEntry> corpus;
  corpus.reserve(term_count);
  EvalBudget vet;
  vet.max_total_steps = cfg.eval_step_ceiling;
  while (corpus.size() < term_count) {
    Term t = gen.random_term(cfg);
    Obj dom = infer(t).dom;
    CorpusEntry entry{t, {}};
    bool term_ok = true;
    for (std::uint64_t j = 0; term_ok && j < cfg.inputs_per_term; ++j) {
      bool found = false;
      for (std::uint64_t mag = cfg.value_magnitude;; mag /= 2) {
        Value a = gen.random_member(dom, mag);
        try {
          (void)eval(t, a, vet);
          entry.inputs.push_back(a);
          found = true;
          break;
        } catch (const BudgetExceeded&) {
          if (mag == 0) break;  // even the smallest inputs blow up; drop the term
        }
      }
      if (!found) term_ok = false;
    }
    if (term_ok) corpus.push_back(std::move(entry));
  }
  return corpus;
}

}  // namespace prcalc
