#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <prcalc/codec.hpp>
#include <prcalc/combinators.hpp>
#include <prcalc/errors.hpp>
#include <prcalc/generate.hpp>

using namespace prcalc;

TEST_CASE("codes of small terms are pinned") {
  // Frozen from the coding equations: pair(kind, pair(tag, payload)).
  CHECK(code_of(Term::zero()).to_decimal(64) == "2");
  CHECK(code_of(Term::succ()).to_decimal(64) == "7");
  CHECK(code_of_obj(Obj::nat()).to_decimal(64) == "3");
  CHECK(code_of(Term::id(Obj::nat())).to_decimal(64) == "92");
  CHECK(code_of(Term::bang(Obj::nat())).to_decimal(64) == "191");
  CHECK(code_of(Term::iter(Term::succ())).to_decimal(64) == "2927");
  Term sss = Term::comp(Term::succ(), Term::comp(Term::succ(), Term::succ()));
  CHECK(code_of(sss).to_decimal(128) == "19640451331084357");
}

TEST_CASE("kind discriminator separates objects from terms") {
  CHECK(code_of(Term::succ()) != code_of(Term::zero()));
  CHECK(code_of_obj(Obj::nat()) != code_of(Term::succ()));
  CHECK_THROWS_AS((void)decode(code_of_obj(Obj::nat())), DecodeError);
  CHECK(decode_obj(code_of_obj(Obj::prod(Obj::one(), Obj::nat()))) ==
        Obj::prod(Obj::one(), Obj::nat()));
  CHECK_THROWS_AS((void)decode_obj(code_of(Term::succ())), DecodeError);
}

TEST_CASE("code_of demands well-typed terms") {
  CHECK_THROWS_AS((void)code_of(Term::comp(Term::succ(), Term::bang(Obj::nat()))), TypeError);
}

TEST_CASE("decode inverts code_of") {
  CHECK(decode(code_of(Term::comp(Term::succ(), Term::succ()))) ==
        Term::comp(Term::succ(), Term::succ()));
  TermGen gen(101);
  GenConfig cfg;
  for (int i = 0; i < 400; ++i) {
    Term t = gen.random_term(cfg);
    Code c = code_of(t);
    CHECK(decode(c) == t);
    CHECK(code_of(decode(c)) == c);
    CHECK(depth_code(c) == bfdepth(t));
    TermType ct = infer_code(c);
    TermType tt = infer(t);
    CHECK(ct.dom == tt.dom);
    CHECK(ct.cod == tt.cod);
  }
}

TEST_CASE("stdlib terms roundtrip through their codes") {
  const StdTerms& st = std_terms();
  for (const Term* t : {&st.add, &st.pred, &st.sub, &st.not_, &st.sign, &st.or_, &st.and_,
                        &st.eq, &st.mult, &st.pow}) {
    Code c = code_of(*t);
    CHECK(is_pr_code(c));
    CHECK(decode(c) == *t);
    CHECK(depth_code(c) == bfdepth(*t));
  }
}

TEST_CASE("measure is strict on code children") {
  const StdTerms& st = std_terms();
  // walk a compound code and compare each constructor node with its pieces
  CodeAnalyzer an;
  Code body = code_of(st.eq).unpair().second;
  std::vector<Code> stack{body};
  int seen = 0;
  while (!stack.empty() && seen < 2000) {
    Code b = stack.back();
    stack.pop_back();
    const auto& info = an.body(b);
    REQUIRE(info.valid);
    ++seen;
    if (info.child_v) {
      CHECK(an.body(*info.child_v).depth < info.depth);
      stack.push_back(*info.child_v);
    }
    if (info.child_u) {
      CHECK(an.body(*info.child_u).depth < info.depth);
      stack.push_back(*info.child_u);
    }
  }
  CHECK(seen > 10);
}

TEST_CASE("is_pr_code on raw naturals agrees with decoding") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<std::uint64_t> d;
  int valid = 0;
  for (int i = 0; i < 3000; ++i) {
    Code c = Code::from_natural(Natural(d(rng)));
    bool ok = is_pr_code(c);
    bool decodes = true;
    try {
      (void)decode(c);
    } catch (const DecodeError&) {
      decodes = false;
    }
    CHECK(ok == decodes);
    valid += ok;
  }
  CHECK(valid < 100);  // random naturals are almost never codes

  // every natural below a small bound is classified without throwing
  for (std::uint64_t n = 0; n < 3000; ++n) {
    Code c = Code::from_u64(n);
    (void)is_pr_code(c);
    (void)is_pred_code(c);
  }
}

TEST_CASE("is_pred_code") {
  const StdTerms& st = std_terms();
  // eq . diag : N -> 2 always true
  Term always = Term::comp(st.eq, Term::diag(Obj::nat()));
  CHECK(is_pred_code(code_of(always)));
  // eq . <id, succ> : never true
  Term never = Term::comp(st.eq, pairing(Term::id(Obj::nat()), Term::succ()));
  CHECK(is_pred_code(code_of(never)));
  // successor is no predicate: s(1) = 2 escapes {0,1}
  CHECK_FALSE(is_pred_code(code_of(Term::succ())));
  CHECK_FALSE(is_pred_code(code_of(Term::id(Obj::nat()))));
  // the constantly false predicate through 1
  CHECK(is_pred_code(code_of(Term::bang(Obj::nat()))));
  // constant numerals 0/1 over a map through 1
  CHECK(is_pred_code(code_of(Term::comp(numeral(1), Term::bang(Obj::nat())))));
  CHECK(is_pred_code(code_of(Term::comp(numeral(0), Term::bang(Obj::nat())))));
  // constant 2 is not a predicate
  CHECK_FALSE(is_pred_code(code_of(Term::comp(numeral(2), Term::bang(Obj::nat())))));
  // domain must be N
  CHECK_FALSE(is_pred_code(code_of(st.eq)));
  // predicates are codes
  CHECK(is_pr_code(code_of(always)));
  for (const Term* t : {&always, &never}) {
    Code c = code_of(*t);
    CHECK((!is_pred_code(c) || is_pr_code(c)));
  }
  CHECK_THROWS_AS((void)depth_code(code_of_obj(Obj::nat())), DecodeError);
  CHECK_THROWS_AS((void)infer_code(code_of_obj(Obj::nat())), DecodeError);
}

TEST_CASE("lazy codes compare and materialize exactly") {
  Code a = Code::from_u64(12345);
  Code b = Code::pair(Code::from_u64(3), Code::from_u64(2));
  CHECK(b.to_decimal(64) == "18");
  CHECK(a != b);
  CHECK(a == Code::from_natural(Natural(12345)));
  CHECK(a.equals_natural(Natural(12345)));
  CHECK(a.leq_natural(Natural(12345)));
  CHECK_FALSE(a.leq_natural(Natural(12344)));

  // a compound far beyond the leaf threshold
  const StdTerms& st = std_terms();
  Code big = code_of(st.pow);
  CHECK(big.bits_lower_bound() > Code::kLeafBits);
  CHECK_THROWS_AS((void)big.to_natural(1 << 20), CodeSizeError);
  CHECK_FALSE(big.leq_natural(Natural("123456789123456789")));
  CHECK_FALSE(big.equals_natural(Natural(42)));
  auto [kind, body] = big.unpair();
  CHECK(kind.small());
  CHECK(kind.leaf_value() == 1);
  CHECK(Code::pair(kind, body) == big);
}
