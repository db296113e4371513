#include "prcalc/value.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <variant>

#include "prcalc/errors.hpp"

namespace prcalc {

struct Value::Node {
  std::variant<Natural, std::pair<Value, Value>> v;
  std::size_t h;
};

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

}  // namespace

Value Value::num(Natural n) {
  std::size_t h = mix(0x517, hash_natural(n));
  return Value(std::make_shared<const Node>(Node{std::move(n), h}));
}

Value Value::num(std::uint64_t n) { return num(Natural(static_cast<unsigned long>(n))); }

Value Value::pair(Value first, Value second) {
  std::size_t h = mix(mix(0xabc, first.hash()), second.hash());
  return Value(std::make_shared<const Node>(
      Node{std::make_pair(std::move(first), std::move(second)), h}));
}

bool Value::is_num() const { return std::holds_alternative<Natural>(node_->v); }
bool Value::is_pair() const { return !is_num(); }

const Natural& Value::as_num() const {
  if (!is_num()) throw DomainError("value is a pair, expected a natural");
  return std::get<Natural>(node_->v);
}

const Value& Value::first() const {
  if (is_num()) throw DomainError("value is a natural, expected a pair");
  return std::get<std::pair<Value, Value>>(node_->v).first;
}

const Value& Value::second() const {
  if (is_num()) throw DomainError("value is a natural, expected a pair");
  return std::get<std::pair<Value, Value>>(node_->v).second;
}

bool Value::operator==(const Value& v) const {
  if (node_ == v.node_) return true;
  if (node_->h != v.node_->h) return false;
  if (is_num() != v.is_num()) return false;
  if (is_num()) return as_num() == v.as_num();
  return first() == v.first() && second() == v.second();
}

std::size_t Value::hash() const { return node_->h; }

std::string Value::show() const {
  if (is_num()) return as_num().get_str();
  return "(" + first().show() + "," + second().show() + ")";
}

namespace {

struct ValueParser {
  std::string_view s;
  std::size_t i = 0;
  int line = 1, col = 1;

  void advance() {
    if (i < s.size()) {
      if (s[i] == '\n') { ++line; col = 1; } else { ++col; }
      ++i;
    }
  }
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) advance();
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  Value parse_value() {
    skip_ws();
    if (i >= s.size()) fail("unexpected end of value literal");
    char c = s[i];
    if (c == '(') {
      advance();
      Value a = parse_value();
      skip_ws();
      if (i >= s.size() || s[i] != ',') fail("expected ',' in pair literal");
      advance();
      Value b = parse_value();
      skip_ws();
      if (i >= s.size() || s[i] != ')') fail("expected ')' in pair literal");
      advance();
      return Value::pair(std::move(a), std::move(b));
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected digit or '('");
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i];
      advance();
    }
    return Value::num(Natural(digits));
  }
};

}  // namespace

Value Value::parse(std::string_view text) {
  ValueParser p{text};
  Value v = p.parse_value();
  p.skip_ws();
  if (p.i != text.size()) p.fail("trailing input after value literal");
  return v;
}

bool member(const Value& a, const Obj& obj) {
  switch (obj.kind()) {
    case ObjKind::One: return a.is_num() && a.as_num() == 0;
    case ObjKind::Nat: return a.is_num();
    case ObjKind::Prod:
      return a.is_pair() && member(a.first(), obj.left()) && member(a.second(), obj.right());
  }
  return false;
}

}  // namespace prcalc
