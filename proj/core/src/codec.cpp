#include "prcalc/codec.hpp"

#include <vector>

#include "prcalc/combinators.hpp"
#include "prcalc/errors.hpp"

namespace prcalc {

namespace {

constexpr int kMaxAnalyzerDepth = 200'000;

bool is_zero_code(const Code& c) { return c.small() && c.leaf_value() == 0; }

Code obj_body_of(const Obj& a) {
  switch (a.kind()) {
    case ObjKind::One: return Code::pair(Code::from_u64(0), Code());
    case ObjKind::Nat: return Code::pair(Code::from_u64(1), Code());
    case ObjKind::Prod:
      return Code::pair(Code::from_u64(2),
                        Code::pair(obj_body_of(a.left()), obj_body_of(a.right())));
  }
  throw DecodeError("unknown object kind");
}

Code term_body_of(const Term& f,
                  std::unordered_map<const void*, Code>& memo) {
  auto it = memo.find(f.node_id());
  if (it != memo.end()) return it->second;
  auto tag = [](TermTag t) { return Code::from_u64(static_cast<std::uint64_t>(t)); };
  Code body;
  switch (f.tag()) {
    case TermTag::Zero:
    case TermTag::Succ:
      body = Code::pair(tag(f.tag()), Code());
      break;
    case TermTag::Id:
    case TermTag::Bang:
    case TermTag::Diag:
      body = Code::pair(tag(f.tag()), obj_body_of(f.obj_a()));
      break;
    case TermTag::Swap:
    case TermTag::ProjL:
      body = Code::pair(tag(f.tag()),
                        Code::pair(obj_body_of(f.obj_a()), obj_body_of(f.obj_b())));
      break;
    case TermTag::Comp:
      body = Code::pair(tag(f.tag()), Code::pair(term_body_of(f.child_v(), memo),
                                                 term_body_of(f.child_u(), memo)));
      break;
    case TermTag::Cyl:
      body = Code::pair(tag(f.tag()), Code::pair(obj_body_of(f.obj_a()),
                                                 term_body_of(f.child_v(), memo)));
      break;
    case TermTag::Iter:
      body = Code::pair(tag(f.tag()), term_body_of(f.child_v(), memo));
      break;
  }
  memo.emplace(f.node_id(), body);
  return body;
}

}  // namespace

Code code_of(const Term& f) {
  (void)infer(f);  // TypeError on ill-typed input
  std::unordered_map<const void*, Code> memo;
  return Code::pair(Code::from_u64(1), term_body_of(f, memo));
}

Code code_of_obj(const Obj& a) {
  return Code::pair(Code::from_u64(0), obj_body_of(a));
}

std::optional<Obj> CodeAnalyzer::object_body(const Code& body_code) {
  return object_body_guarded(body_code, 0);
}

std::optional<Obj> CodeAnalyzer::object_body_guarded(const Code& body_code, int depth_guard) {
  auto it = obj_cache_.find(body_code.node_id());
  if (it != obj_cache_.end()) return it->second.second;
  if (depth_guard > kMaxAnalyzerDepth)
    throw DecodeError("object code nesting exceeds the analyzer depth cap");
  std::optional<Obj> result;
  auto [tag, payload] = body_code.unpair();
  if (tag.small()) {
    const Natural& t = tag.leaf_value();
    if (t == 0 && is_zero_code(payload)) result = Obj::one();
    else if (t == 1 && is_zero_code(payload)) result = Obj::nat();
    else if (t == 2) {
      auto [l, r] = payload.unpair();
      auto lo = object_body_guarded(l, depth_guard + 1);
      auto ro = lo ? object_body_guarded(r, depth_guard + 1) : std::nullopt;
      if (lo && ro) result = Obj::prod(*lo, *ro);
    }
  }
  obj_cache_.emplace(body_code.node_id(), std::make_pair(body_code, result));
  return result;
}

const CodeAnalyzer::Info& CodeAnalyzer::body(const Code& body_code) {
  return analyze(body_code, 0);
}

const CodeAnalyzer::Info& CodeAnalyzer::analyze(const Code& body_code, int depth_guard) {
  auto it = cache_.find(body_code.node_id());
  if (it != cache_.end()) return it->second.info;
  if (depth_guard > kMaxAnalyzerDepth)
    throw DecodeError("code nesting exceeds the analyzer depth cap");

  Info info;
  auto invalid = [&](std::string why) -> Info& {
    info.valid = false;
    info.why = std::move(why);
    return info;
  };

  auto [tagc, payload] = body_code.unpair();
  bool done = false;
  if (!tagc.small() || tagc.leaf_value() > 9) {
    invalid("tag out of range");
    done = true;
  }
  if (!done) {
    info.tag = static_cast<TermTag>(tagc.leaf_value().get_ui());
    switch (info.tag) {
      case TermTag::Zero:
      case TermTag::Succ: {
        if (!is_zero_code(payload)) { invalid("basic map carries a payload"); break; }
        info.valid = true;
        info.depth = 1;
        if (info.tag == TermTag::Zero) { info.dom = Obj::one(); info.cod = Obj::nat(); }
        else { info.dom = Obj::nat(); info.cod = Obj::nat(); }
        break;
      }
      case TermTag::Id:
      case TermTag::Bang:
      case TermTag::Diag: {
        auto a = object_body(payload);
        if (!a) { invalid("invalid object annotation"); break; }
        info.valid = true;
        info.depth = 1;
        info.obj_a = a;
        info.dom = *a;
        if (info.tag == TermTag::Id) info.cod = *a;
        else if (info.tag == TermTag::Bang) info.cod = Obj::one();
        else info.cod = Obj::prod(*a, *a);
        break;
      }
      case TermTag::Swap:
      case TermTag::ProjL: {
        auto [pa, pb] = payload.unpair();
        auto a = object_body(pa);
        auto b = a ? object_body(pb) : std::nullopt;
        if (!a || !b) { invalid("invalid object annotations"); break; }
        info.valid = true;
        info.depth = 1;
        info.obj_a = a;
        info.obj_b = b;
        info.dom = Obj::prod(*a, *b);
        info.cod = info.tag == TermTag::Swap ? Obj::prod(*b, *a) : *a;
        break;
      }
      case TermTag::Comp: {
        auto [vb, ub] = payload.unpair();
        const Info& vi = analyze(vb, depth_guard + 1);
        if (!vi.valid) { invalid("composition: outer map: " + vi.why); break; }
        const Info& ui = analyze(ub, depth_guard + 1);
        if (!ui.valid) { invalid("composition: inner map: " + ui.why); break; }
        if (*ui.cod != *vi.dom) { invalid("composition: codomain/domain mismatch"); break; }
        info.valid = true;
        info.child_v = vb;
        info.child_u = ub;
        info.dom = ui.dom;
        info.cod = vi.cod;
        info.depth = std::max(vi.depth, ui.depth) + 1;
        break;
      }
      case TermTag::Cyl: {
        auto [pa, vb] = payload.unpair();
        auto a = object_body(pa);
        if (!a) { invalid("cylinder: invalid object annotation"); break; }
        const Info& vi = analyze(vb, depth_guard + 1);
        if (!vi.valid) { invalid("cylinder: body: " + vi.why); break; }
        info.valid = true;
        info.obj_a = a;
        info.child_v = vb;
        info.dom = Obj::prod(*a, *vi.dom);
        info.cod = Obj::prod(*a, *vi.cod);
        info.depth = vi.depth + 1;
        break;
      }
      case TermTag::Iter: {
        const Info& ui = analyze(payload, depth_guard + 1);
        if (!ui.valid) { invalid("iteration: body: " + ui.why); break; }
        if (*ui.dom != *ui.cod) { invalid("iteration: body is not an endo map"); break; }
        info.valid = true;
        info.child_v = payload;
        info.dom = Obj::prod(*ui.dom, Obj::nat());
        info.cod = ui.dom;
        info.depth = ui.depth + 1;
        break;
      }
    }
  }
  auto [pos, inserted] = cache_.emplace(body_code.node_id(), Entry{body_code, std::move(info)});
  (void)inserted;
  return pos->second.info;
}

Code CodeAnalyzer::term_body_checked(const Code& full) {
  auto it = strip_cache_.find(full.node_id());
  if (it != strip_cache_.end()) return it->second.second;
  auto [kind, b] = full.unpair();
  if (!kind.small() || kind.leaf_value() > 1)
    throw DecodeError("kind discriminator out of range");
  if (kind.leaf_value() == 0)
    throw DecodeError("object code where a term code was expected");
  const Info& info = body(b);
  if (!info.valid) throw DecodeError("not a valid term code: " + info.why);
  strip_cache_.emplace(full.node_id(), std::make_pair(full, b));
  return b;
}

namespace {

Term rebuild(CodeAnalyzer& an, const Code& body,
             std::unordered_map<const void*, Term>& memo) {
  auto it = memo.find(body.node_id());
  if (it != memo.end()) return it->second;
  const CodeAnalyzer::Info& info = an.body(body);
  Term t = Term::zero();
  switch (info.tag) {
    case TermTag::Zero: t = Term::zero(); break;
    case TermTag::Succ: t = Term::succ(); break;
    case TermTag::Id: t = Term::id(*info.obj_a); break;
    case TermTag::Bang: t = Term::bang(*info.obj_a); break;
    case TermTag::Diag: t = Term::diag(*info.obj_a); break;
    case TermTag::Swap: t = Term::swap(*info.obj_a, *info.obj_b); break;
    case TermTag::ProjL: t = Term::projl(*info.obj_a, *info.obj_b); break;
    case TermTag::Comp:
      t = Term::comp(rebuild(an, *info.child_v, memo), rebuild(an, *info.child_u, memo));
      break;
    case TermTag::Cyl:
      t = Term::cyl(*info.obj_a, rebuild(an, *info.child_v, memo));
      break;
    case TermTag::Iter:
      t = Term::iter(rebuild(an, *info.child_v, memo));
      break;
  }
  memo.emplace(body.node_id(), t);
  return t;
}

Obj rebuild_obj(CodeAnalyzer& an, const Code& body) {
  auto o = an.object_body(body);
  if (!o) throw DecodeError("not a valid object code");
  return *o;
}

// Bodies of the Boolean-producing stdlib combinators; a predicate code
// qualifies when one of these sits at the head of its composition spine.
const std::vector<Code>& boolean_root_bodies() {
  static const std::vector<Code> roots = [] {
    const StdTerms& st = std_terms();
    std::vector<Code> v;
    for (const Term* t : {&st.eq, &st.sign, &st.not_, &st.and_, &st.or_})
      v.push_back(code_of(*t).unpair().second);
    return v;
  }();
  return roots;
}

const Code& zero_term_body() {
  static const Code c = code_of(Term::zero()).unpair().second;
  return c;
}

const Code& one_numeral_body() {
  static const Code c = code_of(numeral(1)).unpair().second;
  return c;
}

bool boolean_rooted(CodeAnalyzer& an, const Code& body) {
  for (const Code& r : boolean_root_bodies())
    if (body == r) return true;
  const CodeAnalyzer::Info& info = an.body(body);
  if (info.valid && info.tag == TermTag::Comp) return boolean_rooted(an, *info.child_v);
  return false;
}

}  // namespace

Term decode(const Code& c) {
  CodeAnalyzer an;
  Code body = an.term_body_checked(c);
  std::unordered_map<const void*, Term> memo;
  return rebuild(an, body, memo);
}

Obj decode_obj(const Code& c) {
  auto [kind, body] = c.unpair();
  if (!kind.small() || kind.leaf_value() != 0)
    throw DecodeError("not an object code");
  CodeAnalyzer an;
  return rebuild_obj(an, body);
}

bool is_pr_code(const Code& c) {
  auto [kind, body] = c.unpair();
  if (!kind.small() || kind.leaf_value() != 1) return false;
  CodeAnalyzer an;
  return an.body(body).valid;
}

bool is_pred_code(const Code& c) {
  auto [kind, body] = c.unpair();
  if (!kind.small() || kind.leaf_value() != 1) return false;
  CodeAnalyzer an;
  const CodeAnalyzer::Info& info = an.body(body);
  if (!info.valid || *info.dom != Obj::nat()) return false;
  if (*info.cod == Obj::one()) return true;  // constantly false, lands in 1 = {0}
  if (*info.cod != Obj::nat()) return false;
  if (boolean_rooted(an, body)) return true;
  // Constant 0/1: a numeral composed with a map that factors through 1.
  if (info.tag == TermTag::Comp) {
    const CodeAnalyzer::Info& ui = an.body(*info.child_u);
    if (ui.valid && *ui.cod == Obj::one() &&
        (*info.child_v == zero_term_body() || *info.child_v == one_numeral_body()))
      return true;
  }
  return false;
}

std::uint64_t depth_code(const Code& c) {
  CodeAnalyzer an;
  return an.body(an.term_body_checked(c)).depth;
}

TermType infer_code(const Code& c) {
  CodeAnalyzer an;
  const CodeAnalyzer::Info& info = an.body(an.term_body_checked(c));
  return {*info.dom, *info.cod};
}

}  // namespace prcalc
