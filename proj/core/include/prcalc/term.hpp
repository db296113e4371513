#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "prcalc/obj.hpp"

namespace prcalc {

// Constructor tags in Goedel-coding order; do not reorder.
enum class TermTag : std::uint8_t {
  Zero = 0,   // 0 : 1 -> N
  Succ = 1,   // s : N -> N
  Id = 2,     // id_A : A -> A
  Bang = 3,   // ! : A -> 1
  Diag = 4,   // delta : A -> A x A
  Swap = 5,   // theta : A x B -> B x A
  ProjL = 6,  // l : A x B -> A
  Comp = 7,   // v . u
  Cyl = 8,    // id_A x v
  Iter = 9,   // u^par : A x N -> A for endo u : A -> A
};

// A map term of the calculus. Basic maps carry explicit object annotations
// so typing is syntax-directed. Immutable tree with structural sharing.
class Term {
 public:
  static Term zero();
  static Term succ();
  static Term id(Obj a);
  static Term bang(Obj a);
  static Term diag(Obj a);
  static Term swap(Obj a, Obj b);
  static Term projl(Obj a, Obj b);
  static Term comp(Term v, Term u);  // v after u
  static Term cyl(Obj a, Term v);
  static Term iter(Term u);

  TermTag tag() const;
  const Obj& obj_a() const;    // annotation; Id/Bang/Diag/Swap/ProjL/Cyl
  const Obj& obj_b() const;    // Swap/ProjL
  const Term& child_v() const;  // Comp: outer map; Cyl/Iter: the wrapped map
  const Term& child_u() const;  // Comp: inner map

  bool operator==(const Term& t) const;
  bool operator!=(const Term& t) const { return !(*this == t); }
  std::size_t hash() const;

  std::string show() const;  // parenthesized prefix grammar

  const void* node_id() const;  // stable identity for per-node caches

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

struct TermType {
  Obj dom, cod;
};

// Syntax-directed type inference; throws TypeError (with a path to the
// offending subterm) when the term is ill-typed.
TermType infer(const Term& f);

// Operator depth: basic maps 1; comp max+1; cyl and iter +1.
std::uint64_t bfdepth(const Term& f);

}  // namespace prcalc
