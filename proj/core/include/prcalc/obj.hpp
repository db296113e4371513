#pragma once

#include <cstddef>
#include <memory>
#include <string>

namespace prcalc {

enum class ObjKind { One, Nat, Prod };

// A finite product object: 1, N, or A x B. Immutable, shareable.
class Obj {
 public:
  static Obj one();
  static Obj nat();
  static Obj prod(Obj left, Obj right);

  ObjKind kind() const;
  const Obj& left() const;   // Prod only
  const Obj& right() const;  // Prod only

  bool operator==(const Obj& o) const;
  bool operator!=(const Obj& o) const { return !(*this == o); }
  std::size_t hash() const;

  std::string show() const;  // "1" | "N" | "(x A B)"

  struct Node;

 private:
  explicit Obj(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ObjHash {
  std::size_t operator()(const Obj& o) const { return o.hash(); }
};

}  // namespace prcalc
