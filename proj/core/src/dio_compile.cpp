#include <map>

#include "prcalc/codec.hpp"
#include "prcalc/combinators.hpp"
#include "prcalc/dio.hpp"
#include "prcalc/errors.hpp"

namespace prcalc {

namespace {

// Builds the predicate term bottom-up while metering construction work.
struct Compiler {
  const CompileOptions& opts;
  std::uint64_t nodes = 0;
  const StdTerms& st = std_terms();

  void bump(std::uint64_t n = 1) {
    nodes += n;
    if (nodes > opts.max_nodes)
      throw CompileError("compiled predicate exceeds the node cap of " +
                         std::to_string(opts.max_nodes));
  }

  Term comp(const Term& v, const Term& u) { bump(); return Term::comp(v, u); }
  Term pair2(const Term& f, const Term& g) { bump(7); return pairing(f, g); }

  Term num_const(const Obj& a, const Integer& c) {
    if (c < 0 || c > Integer(static_cast<unsigned long>(opts.max_coefficient)))
      throw CompileError("coefficient " + c.get_str() + " exceeds the numeral cap");
    std::uint64_t n = c.get_ui();
    bump(n + 2);
    return constant(a, n);
  }

  Obj tuple_obj(std::uint32_t m) {
    Obj t = Obj::nat();
    for (std::uint32_t i = 1; i < m; ++i) t = Obj::prod(t, Obj::nat());
    return t;
  }

  // Horner in the last variable; coefficients recurse on the prefix tuple.
  Term poly_term(const Polynomial& p, std::uint32_t m) {
    const Obj tup = tuple_obj(m);
    if (p.terms.empty()) return num_const(tup, 0);
    if (m == 1) {
      std::map<std::uint32_t, Integer> groups;
      for (const auto& [e, c] : p.terms) groups[e[0]] = c;
      std::uint32_t top = groups.rbegin()->first;
      Term acc = num_const(tup, groups[top]);
      for (std::uint32_t j = top; j-- > 0;) {
        acc = comp(st.mult, pair2(acc, Term::id(Obj::nat())));
        auto it = groups.find(j);
        if (it != groups.end()) acc = comp(st.add, pair2(acc, num_const(tup, it->second)));
      }
      return acc;
    }
    const Obj prefix = tuple_obj(m - 1);
    const Term lastvar = projr(prefix, Obj::nat());
    const Term lift = Term::projl(prefix, Obj::nat());
    bump(3);
    std::map<std::uint32_t, Polynomial> groups;
    for (const auto& [e, c] : p.terms) {
      std::vector<std::uint32_t> rest(e.begin(), e.end() - 1);
      auto [it, inserted] = groups.try_emplace(e[m - 1]);
      if (inserted) it->second.var_count = m - 1;
      it->second.terms.emplace(std::move(rest), c);
    }
    std::uint32_t top = groups.rbegin()->first;
    Term acc = comp(poly_term(groups.at(top), m - 1), lift);
    for (std::uint32_t j = top; j-- > 0;) {
      acc = comp(st.mult, pair2(acc, lastvar));
      auto it = groups.find(j);
      if (it != groups.end())
        acc = comp(st.add, pair2(acc, comp(poly_term(it->second, m - 1), lift)));
    }
    return acc;
  }

  // n -> cantor_m(n) as a nested tuple, unfolding the last coordinate first.
  Term unpack_term(std::uint32_t m) {
    const Obj n = Obj::nat();
    if (m == 1) { bump(); return Term::id(n); }
    const Obj nn = Obj::prod(n, n);
    // n -> ((0,0), n), then walk the pairing diagonal n steps.
    Term zz = comp(Term::diag(n), num_const(n, 0));
    Term seed = comp(Term::swap(n, nn), comp(Term::cyl(n, zz), Term::diag(n)));
    bump(4);
    Term f1 = comp(st.mult, pair2(comp(st.sign, projr(n, n)),
                                  comp(Term::succ(), Term::projl(n, n))));
    Term f2 = comp(st.add,
                   pair2(comp(st.pred, projr(n, n)),
                         comp(st.mult, pair2(comp(st.not_, projr(n, n)),
                                             comp(Term::succ(), Term::projl(n, n))))));
    bump(10);
    Term walk = comp(Term::iter(pair2(f1, f2)), seed);
    bump(1);
    const Obj prefix = tuple_obj(m - 1);
    return comp(Term::swap(n, prefix),
                comp(Term::cyl(n, unpack_term(m - 1)), comp(Term::swap(n, n), walk)));
  }

  Term build(const DioSystem& d) {
    std::uint32_t m = d.var_count;
    Term phi = Term::zero();
    bool first = true;
    // [L1 != R1 or ... or Lk != Rk], with negative monomials moved across.
    for (auto it = d.equations.rbegin(); it != d.equations.rend(); ++it) {
      // L = R becomes Lpos + Rneg = Rpos + Lneg, all coefficients natural.
      auto [lpos, lneg] = it->lhs.split_signs();
      auto [rpos, rneg] = it->rhs.split_signs();
      lpos += rneg;
      rpos += lneg;
      Term left = poly_term(lpos, m);
      Term right = poly_term(rpos, m);
      Term neq = comp(st.not_, comp(st.eq, pair2(left, right)));
      phi = first ? neq : comp(st.or_, pair2(neq, phi));
      first = false;
    }
    return comp(phi, unpack_term(m));
  }
};

}  // namespace

Term compile_predicate_term(const DioSystem& d, const CompileOptions& opts) {
  if (d.equations.empty()) throw DomainError("diophantine system has no equations");
  if (d.var_count == 0) throw DomainError("diophantine system has no variables");
  Compiler c{opts};
  return c.build(d);
}

Code compile_predicate(const DioSystem& d, const CompileOptions& opts) {
  return code_of(compile_predicate_term(d, opts));
}

}  // namespace prcalc
