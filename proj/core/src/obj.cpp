#include "prcalc/obj.hpp"

#include <optional>
#include <stdexcept>

namespace prcalc {

struct Obj::Node {
  ObjKind kind;
  std::optional<Obj> l, r;
  std::size_t h;
};

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

const std::shared_ptr<const Obj::Node>& one_node() {
  static const auto n =
      std::make_shared<const Obj::Node>(Obj::Node{ObjKind::One, {}, {}, 0x101});
  return n;
}

const std::shared_ptr<const Obj::Node>& nat_node() {
  static const auto n =
      std::make_shared<const Obj::Node>(Obj::Node{ObjKind::Nat, {}, {}, 0x202});
  return n;
}

}  // namespace

Obj Obj::one() { return Obj(one_node()); }
Obj Obj::nat() { return Obj(nat_node()); }

Obj Obj::prod(Obj left, Obj right) {
  std::size_t h = mix(mix(0x303, left.hash()), right.hash());
  return Obj(std::make_shared<const Node>(
      Node{ObjKind::Prod, std::move(left), std::move(right), h}));
}

ObjKind Obj::kind() const { return node_->kind; }

const Obj& Obj::left() const {
  if (node_->kind != ObjKind::Prod) throw std::logic_error("Obj::left on non-product");
  return *node_->l;
}

const Obj& Obj::right() const {
  if (node_->kind != ObjKind::Prod) throw std::logic_error("Obj::right on non-product");
  return *node_->r;
}

bool Obj::operator==(const Obj& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind || node_->h != o.node_->h) return false;
  if (node_->kind != ObjKind::Prod) return true;
  return left() == o.left() && right() == o.right();
}

std::size_t Obj::hash() const { return node_->h; }

std::string Obj::show() const {
  switch (node_->kind) {
    case ObjKind::One: return "1";
    case ObjKind::Nat: return "N";
    case ObjKind::Prod: return "(x " + left().show() + " " + right().show() + ")";
  }
  return "?";
}

}  // namespace prcalc
