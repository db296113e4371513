#include "prcalc/term.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "prcalc/errors.hpp"

namespace prcalc {

struct Term::Node {
  TermTag tag;
  std::optional<Obj> a, b;
  std::optional<Term> v, u;
  std::size_t h;
};

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

}  // namespace

Term Term::zero() {
  static const Term t(std::make_shared<const Node>(Node{TermTag::Zero, {}, {}, {}, {}, 0x10}));
  return t;
}

Term Term::succ() {
  static const Term t(std::make_shared<const Node>(Node{TermTag::Succ, {}, {}, {}, {}, 0x20}));
  return t;
}

Term Term::id(Obj a) {
  std::size_t h = mix(0x30, a.hash());
  return Term(std::make_shared<const Node>(Node{TermTag::Id, std::move(a), {}, {}, {}, h}));
}

Term Term::bang(Obj a) {
  std::size_t h = mix(0x40, a.hash());
  return Term(std::make_shared<const Node>(Node{TermTag::Bang, std::move(a), {}, {}, {}, h}));
}

Term Term::diag(Obj a) {
  std::size_t h = mix(0x50, a.hash());
  return Term(std::make_shared<const Node>(Node{TermTag::Diag, std::move(a), {}, {}, {}, h}));
}

Term Term::swap(Obj a, Obj b) {
  std::size_t h = mix(mix(0x60, a.hash()), b.hash());
  return Term(std::make_shared<const Node>(
      Node{TermTag::Swap, std::move(a), std::move(b), {}, {}, h}));
}

Term Term::projl(Obj a, Obj b) {
  std::size_t h = mix(mix(0x70, a.hash()), b.hash());
  return Term(std::make_shared<const Node>(
      Node{TermTag::ProjL, std::move(a), std::move(b), {}, {}, h}));
}

Term Term::comp(Term v, Term u) {
  std::size_t h = mix(mix(0x80, v.hash()), u.hash());
  return Term(std::make_shared<const Node>(
      Node{TermTag::Comp, {}, {}, std::move(v), std::move(u), h}));
}

Term Term::cyl(Obj a, Term v) {
  std::size_t h = mix(mix(0x90, a.hash()), v.hash());
  return Term(std::make_shared<const Node>(
      Node{TermTag::Cyl, std::move(a), {}, std::move(v), {}, h}));
}

Term Term::iter(Term u) {
  std::size_t h = mix(0xa0, u.hash());
  return Term(std::make_shared<const Node>(
      Node{TermTag::Iter, {}, {}, std::move(u), {}, h}));
}

TermTag Term::tag() const { return node_->tag; }

const Obj& Term::obj_a() const {
  if (!node_->a) throw std::logic_error("term has no first object annotation");
  return *node_->a;
}

const Obj& Term::obj_b() const {
  if (!node_->b) throw std::logic_error("term has no second object annotation");
  return *node_->b;
}

const Term& Term::child_v() const {
  if (!node_->v) throw std::logic_error("term has no v child");
  return *node_->v;
}

const Term& Term::child_u() const {
  if (!node_->u) throw std::logic_error("term has no u child");
  return *node_->u;
}

bool Term::operator==(const Term& t) const {
  if (node_ == t.node_) return true;
  if (node_->h != t.node_->h || node_->tag != t.node_->tag) return false;
  switch (node_->tag) {
    case TermTag::Zero:
    case TermTag::Succ:
      return true;
    case TermTag::Id:
    case TermTag::Bang:
    case TermTag::Diag:
      return obj_a() == t.obj_a();
    case TermTag::Swap:
    case TermTag::ProjL:
      return obj_a() == t.obj_a() && obj_b() == t.obj_b();
    case TermTag::Comp:
      return child_v() == t.child_v() && child_u() == t.child_u();
    case TermTag::Cyl:
      return obj_a() == t.obj_a() && child_v() == t.child_v();
    case TermTag::Iter:
      return child_v() == t.child_v();
  }
  return false;
}

std::size_t Term::hash() const { return node_->h; }

const void* Term::node_id() const { return node_.get(); }

std::string Term::show() const {
  switch (node_->tag) {
    case TermTag::Zero: return "zero";
    case TermTag::Succ: return "succ";
    case TermTag::Id: return "(id " + obj_a().show() + ")";
    case TermTag::Bang: return "(bang " + obj_a().show() + ")";
    case TermTag::Diag: return "(diag " + obj_a().show() + ")";
    case TermTag::Swap: return "(swap " + obj_a().show() + " " + obj_b().show() + ")";
    case TermTag::ProjL: return "(projl " + obj_a().show() + " " + obj_b().show() + ")";
    case TermTag::Comp: return "(comp " + child_v().show() + " " + child_u().show() + ")";
    case TermTag::Cyl: return "(cyl " + obj_a().show() + " " + child_v().show() + ")";
    case TermTag::Iter: return "(iter " + child_v().show() + ")";
  }
  return "?";
}

namespace {

struct InferCtx {
  std::unordered_map<const void*, TermType> memo;

  TermType go(const Term& f, std::string& path) {
    auto it = memo.find(f.node_id());
    if (it != memo.end()) return it->second;
    TermType r = go_uncached(f, path);
    memo.emplace(f.node_id(), r);
    return r;
  }

  TermType go_uncached(const Term& f, std::string& path) {
    auto descend = [&](const char* seg, const Term& child) {
      std::size_t mark = path.size();
      path += seg;
      TermType t = go(child, path);
      path.resize(mark);
      return t;
    };
    switch (f.tag()) {
      case TermTag::Zero: return {Obj::one(), Obj::nat()};
      case TermTag::Succ: return {Obj::nat(), Obj::nat()};
      case TermTag::Id: return {f.obj_a(), f.obj_a()};
      case TermTag::Bang: return {f.obj_a(), Obj::one()};
      case TermTag::Diag: return {f.obj_a(), Obj::prod(f.obj_a(), f.obj_a())};
      case TermTag::Swap:
        return {Obj::prod(f.obj_a(), f.obj_b()), Obj::prod(f.obj_b(), f.obj_a())};
      case TermTag::ProjL: return {Obj::prod(f.obj_a(), f.obj_b()), f.obj_a()};
      case TermTag::Comp: {
        TermType tu = descend(".u", f.child_u());
        TermType tv = descend(".v", f.child_v());
        if (tu.cod != tv.dom)
          throw TypeError("comp: codomain of u is " + tu.cod.show() +
                              " but domain of v is " + tv.dom.show(),
                          path.empty() ? "root" : path);
        return {tu.dom, tv.cod};
      }
      case TermTag::Cyl: {
        TermType tv = descend(".v", f.child_v());
        return {Obj::prod(f.obj_a(), tv.dom), Obj::prod(f.obj_a(), tv.cod)};
      }
      case TermTag::Iter: {
        TermType tu = descend(".u", f.child_v());
        if (tu.dom != tu.cod)
          throw TypeError("iter: body must be an endo map, has type " + tu.dom.show() +
                              " -> " + tu.cod.show(),
                          path.empty() ? "root" : path);
        return {Obj::prod(tu.dom, Obj::nat()), tu.dom};
      }
    }
    throw TypeError("unknown term tag");
  }
};

}  // namespace

TermType infer(const Term& f) {
  InferCtx ctx;
  std::string path;
  return ctx.go(f, path);
}

std::uint64_t bfdepth(const Term& f) {
  std::unordered_map<const void*, std::uint64_t> memo;
  // Iterative post-order: shared subtrees are measured once.
  struct Frame { Term t; bool expanded; };
  std::vector<Frame> stack{{f, false}};
  while (!stack.empty()) {
    auto [t, expanded] = stack.back();
    stack.pop_back();
    if (memo.count(t.node_id())) continue;
    switch (t.tag()) {
      case TermTag::Zero:
      case TermTag::Succ:
      case TermTag::Id:
      case TermTag::Bang:
      case TermTag::Diag:
      case TermTag::Swap:
      case TermTag::ProjL:
        memo[t.node_id()] = 1;
        break;
      case TermTag::Comp:
        if (expanded) {
          memo[t.node_id()] =
              std::max(memo[t.child_v().node_id()], memo[t.child_u().node_id()]) + 1;
        } else {
          stack.push_back({t, true});
          stack.push_back({t.child_v(), false});
          stack.push_back({t.child_u(), false});
        }
        break;
      case TermTag::Cyl:
      case TermTag::Iter:
        if (expanded) {
          memo[t.node_id()] = memo[t.child_v().node_id()] + 1;
        } else {
          stack.push_back({t, true});
          stack.push_back({t.child_v(), false});
        }
        break;
    }
  }
  return memo[f.node_id()];
}

}  // namespace prcalc
