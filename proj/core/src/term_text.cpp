#include "prcalc/term_text.hpp"

#include <cctype>
#include <string>

#include "prcalc/errors.hpp"

namespace prcalc {

namespace {

constexpr int kMaxNesting = 10000;

struct TermParser {
  std::string_view s;
  std::size_t i = 0;
  int line = 1, col = 1;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  void advance() {
    if (i < s.size()) {
      if (s[i] == '\n') { ++line; col = 1; } else { ++col; }
      ++i;
    }
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) advance();
  }

  bool at_end() {
    skip_ws();
    return i >= s.size();
  }

  char peek() { return i < s.size() ? s[i] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string word() {
    skip_ws();
    std::string w;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      w += s[i];
      advance();
    }
    if (w.empty()) fail("expected a name");
    return w;
  }

  Obj obj(int depth) {
    if (depth > kMaxNesting) fail("object nesting too deep");
    skip_ws();
    if (peek() == '(') {
      advance();
      std::string w = word();
      if (w != "x") fail("expected 'x' in product object, got '" + w + "'");
      Obj a = obj(depth + 1);
      Obj b = obj(depth + 1);
      expect(')');
      return Obj::prod(a, b);
    }
    std::string w = word();
    if (w == "1") return Obj::one();
    if (w == "N") return Obj::nat();
    fail("expected object ('1', 'N' or '(x ...)'), got '" + w + "'");
  }

  Term term(int depth) {
    if (depth > kMaxNesting) fail("term nesting too deep");
    skip_ws();
    if (peek() != '(') {
      std::string w = word();
      if (w == "zero") return Term::zero();
      if (w == "succ") return Term::succ();
      fail("expected term, got '" + w + "'");
    }
    advance();
    std::string w = word();
    Term t = Term::zero();
    if (w == "id") {
      t = Term::id(obj(depth + 1));
    } else if (w == "bang") {
      t = Term::bang(obj(depth + 1));
    } else if (w == "diag") {
      t = Term::diag(obj(depth + 1));
    } else if (w == "swap") {
      Obj a = obj(depth + 1);
      t = Term::swap(a, obj(depth + 1));
    } else if (w == "projl") {
      Obj a = obj(depth + 1);
      t = Term::projl(a, obj(depth + 1));
    } else if (w == "comp") {
      Term v = term(depth + 1);
      t = Term::comp(v, term(depth + 1));
    } else if (w == "cyl") {
      Obj a = obj(depth + 1);
      t = Term::cyl(a, term(depth + 1));
    } else if (w == "iter") {
      t = Term::iter(term(depth + 1));
    } else {
      fail("unknown term constructor '" + w + "'");
    }
    expect(')');
    return t;
  }
};

}  // namespace

Term parse_term(std::string_view text) {
  TermParser p{text};
  Term t = p.term(0);
  if (!p.at_end()) p.fail("trailing input after term");
  return t;
}

Obj parse_obj(std::string_view text) {
  TermParser p{text};
  Obj o = p.obj(0);
  if (!p.at_end()) p.fail("trailing input after object");
  return o;
}

}  // namespace prcalc
