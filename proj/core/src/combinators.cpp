#include "prcalc/combinators.hpp"

#include "prcalc/errors.hpp"

namespace prcalc {

Term pairing(const Term& f, const Term& g) {
  TermType tf = infer(f);
  TermType tg = infer(g);
  if (tf.dom != tg.dom)
    throw TypeError("pairing: domains disagree: " + tf.dom.show() + " vs " + tg.dom.show());
  const Obj& c = tf.dom;
  const Obj& a = tf.cod;
  // c -> (c,c) -> (c,f c) -> (f c,c) -> (f c,g c)
  return Term::comp(Term::cyl(a, g),
                    Term::comp(Term::swap(c, a), Term::comp(Term::cyl(c, f), Term::diag(c))));
}

Term projr(const Obj& a, const Obj& b) {
  return Term::comp(Term::projl(b, a), Term::swap(a, b));
}

Term numeral(std::uint64_t n) {
  Term t = Term::zero();
  for (std::uint64_t i = 0; i < n; ++i) t = Term::comp(Term::succ(), t);
  return t;
}

Term constant(const Obj& a, std::uint64_t n) {
  return Term::comp(numeral(n), Term::bang(a));
}

namespace {

StdTerms build_std_terms() {
  const Obj n = Obj::nat();
  const Obj nn = Obj::prod(n, n);
  const Term const0 = constant(n, 0);
  const Term const1 = constant(n, 1);

  // a -> (0,0), ignoring the input
  const Term zz = Term::comp(Term::diag(n), constant(n, 0));
  // a -> ((0,0), a)
  const Term seed_zero =
      Term::comp(Term::swap(n, nn), Term::comp(Term::cyl(n, zz), Term::diag(n)));

  // (a,b) -> (b, b+1)
  const Term step_pred =
      Term::comp(Term::cyl(n, Term::succ()), Term::comp(Term::diag(n), projr(n, n)));
  const Term pred = Term::comp(Term::projl(n, n), Term::comp(Term::iter(step_pred), seed_zero));

  const Term add = Term::iter(Term::succ());
  const Term sub = Term::iter(pred);

  const Term not_ = Term::comp(Term::iter(const0), pairing(const1, Term::id(n)));
  const Term sign = Term::comp(Term::iter(const1), pairing(const0, Term::id(n)));
  const Term or_ = Term::comp(sign, add);
  const Term and_ = Term::comp(
      not_, Term::comp(or_, pairing(Term::comp(not_, Term::projl(n, n)),
                                    Term::comp(not_, projr(n, n)))));
  const Term eq =
      Term::comp(not_, Term::comp(add, pairing(sub, Term::comp(sub, Term::swap(n, n)))));

  // (x,y) -> ((x,c), y); iterating a step on (x,acc) then projecting acc.
  auto fold_seed = [&](const Term& init) {
    return Term::comp(Term::swap(n, nn),
                      Term::comp(Term::cyl(n, pairing(Term::id(n), init)), Term::swap(n, n)));
  };
  const Term step_mult = pairing(Term::projl(n, n), add);
  const Term mult =
      Term::comp(projr(n, n), Term::comp(Term::iter(step_mult), fold_seed(const0)));
  const Term step_pow = pairing(Term::projl(n, n), mult);
  const Term pow =
      Term::comp(projr(n, n), Term::comp(Term::iter(step_pow), fold_seed(const1)));

  return StdTerms{add, pred, sub, not_, sign, or_, and_, eq, mult, pow};
}

}  // namespace

const StdTerms& std_terms() {
  static const StdTerms t = build_std_terms();
  return t;
}

}  // namespace prcalc
