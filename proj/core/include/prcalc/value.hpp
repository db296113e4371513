#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "prcalc/natural.hpp"
#include "prcalc/obj.hpp"

namespace prcalc {

// An element of the nested-pair universe: a natural or a pair of values.
// Immutable with a cached structural hash.
class Value {
 public:
  static Value num(Natural n);
  static Value num(std::uint64_t n);
  static Value pair(Value first, Value second);

  bool is_num() const;
  bool is_pair() const;
  const Natural& as_num() const;  // DomainError if pair
  const Value& first() const;     // DomainError if num
  const Value& second() const;

  bool operator==(const Value& v) const;
  bool operator!=(const Value& v) const { return !(*this == v); }
  std::size_t hash() const;

  std::string show() const;  // e.g. "((1,2),3)"

  // Literal syntax: naturals in decimal, pairs "(a,b)"; whitespace-insensitive.
  static Value parse(std::string_view text);  // ParseError

 private:
  struct Node;
  explicit Value(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

// Membership of a value in the subset of the universe denoted by an object:
// 1 = {0}, N = all naturals, A x B = pairs componentwise.
bool member(const Value& a, const Obj& obj);

}  // namespace prcalc
