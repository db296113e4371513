#include "prcalc/dio.hpp"

#include <algorithm>
#include <cctype>

#include "prcalc/cantor.hpp"
#include "prcalc/errors.hpp"

namespace prcalc {

Polynomial Polynomial::constant(std::uint32_t m, Integer c) {
  Polynomial p;
  p.var_count = m;
  if (c != 0) p.terms.emplace(std::vector<std::uint32_t>(m, 0), std::move(c));
  return p;
}

Polynomial Polynomial::variable(std::uint32_t m, std::uint32_t index) {
  Polynomial p;
  p.var_count = m;
  std::vector<std::uint32_t> e(m, 0);
  e[index - 1] = 1;
  p.terms.emplace(std::move(e), Integer(1));
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  Polynomial n = o.negated();
  return *this += n;
}

Polynomial Polynomial::negated() const {
  Polynomial p;
  p.var_count = var_count;
  for (const auto& [e, c] : terms) p.terms.emplace(e, -c);
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial p;
  p.var_count = var_count;
  for (const auto& [e1, c1] : terms) {
    for (const auto& [e2, c2] : o.terms) {
      std::vector<std::uint32_t> e(var_count, 0);
      for (std::uint32_t i = 0; i < var_count; ++i) e[i] = e1[i] + e2[i];
      Integer c = c1 * c2;
      auto it = p.terms.find(e);
      if (it == p.terms.end()) {
        if (c != 0) p.terms.emplace(std::move(e), std::move(c));
      } else {
        it->second += c;
        if (it->second == 0) p.terms.erase(it);
      }
    }
  }
  return p;
}

std::pair<Polynomial, Polynomial> Polynomial::split_signs() const {
  Polynomial pos, neg;
  pos.var_count = neg.var_count = var_count;
  for (const auto& [e, c] : terms) {
    if (c > 0) pos.terms.emplace(e, c);
    else neg.terms.emplace(e, -c);
  }
  return {pos, neg};
}

std::uint32_t Polynomial::degree_in(std::uint32_t index) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, e[index - 1]);
  return d;
}

namespace {

struct DioParser {
  std::string_view s;
  std::size_t i = 0;
  int line = 1, col = 1;
  std::uint32_t max_var = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  void advance() {
    if (i < s.size()) {
      if (s[i] == '\n') { ++line; col = 1; } else { ++col; }
      ++i;
    }
  }

  void skip_blank() {  // spaces and tabs, not newlines
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) advance();
  }

  char peek() { return i < s.size() ? s[i] : '\0'; }

  // Polynomials are parsed with a placeholder variable count and fixed up
  // once the whole system is known.
  using Raw = std::map<std::vector<std::uint32_t>, Integer>;

  static Raw raw_add(const Raw& a, const Raw& b, int sign_b) {
    Raw r = a;
    for (const auto& [e, c] : b) {
      Integer v = sign_b < 0 ? Integer(-c) : c;
      auto it = r.find(e);
      if (it == r.end()) r.emplace(e, v);
      else {
        it->second += v;
        if (it->second == 0) r.erase(it);
      }
    }
    return r;
  }

  static std::vector<std::uint32_t> exp_join(const std::vector<std::uint32_t>& a,
                                             const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> e(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) e[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) e[i] += b[i];
    return e;
  }

  static Raw raw_mul(const Raw& a, const Raw& b) {
    Raw r;
    for (const auto& [e1, c1] : a)
      for (const auto& [e2, c2] : b) {
        auto e = exp_join(e1, e2);
        Integer c = c1 * c2;
        auto it = r.find(e);
        if (it == r.end()) {
          if (c != 0) r.emplace(std::move(e), std::move(c));
        } else {
          it->second += c;
          if (it->second == 0) r.erase(it);
        }
      }
    return r;
  }

  Integer read_int() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    if (digits.empty()) fail("expected a number");
    return Integer(digits);
  }

  Raw factor() {
    skip_blank();
    char c = peek();
    Raw base;
    if (c == '(') {
      advance();
      base = expr();
      skip_blank();
      if (peek() != ')') fail("expected ')'");
      advance();
    } else if (c == 'x') {
      advance();
      Integer idx = read_int();
      if (idx < 1 || idx > 64) fail("variable index out of range");
      auto v = static_cast<std::uint32_t>(idx.get_ui());
      max_var = std::max(max_var, v);
      std::vector<std::uint32_t> e(v, 0);
      e[v - 1] = 1;
      base.emplace(std::move(e), Integer(1));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n = read_int();
      if (n != 0) base.emplace(std::vector<std::uint32_t>{}, std::move(n));
    } else {
      fail("expected a factor (number, variable or parenthesized expression)");
    }
    skip_blank();
    if (peek() == '^') {
      advance();
      skip_blank();
      Integer e = read_int();
      if (e < 0 || e > 64) fail("exponent out of range");
      Raw acc;
      acc.emplace(std::vector<std::uint32_t>{}, Integer(1));
      for (Integer k = 0; k < e; ++k) acc = raw_mul(acc, base);
      return acc;
    }
    return base;
  }

  Raw product() {
    Raw acc = factor();
    while (true) {
      skip_blank();
      if (peek() == '*') {
        advance();
        acc = raw_mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Raw expr() {
    skip_blank();
    int sign = 1;
    if (peek() == '-') { sign = -1; advance(); }
    else if (peek() == '+') advance();
    Raw acc = product();
    if (sign < 0) acc = raw_add(Raw{}, acc, -1);
    while (true) {
      skip_blank();
      char c = peek();
      if (c == '+' || c == '-') {
        advance();
        acc = raw_add(acc, product(), c == '-' ? -1 : 1);
      } else {
        return acc;
      }
    }
  }

  Polynomial finalize(const Raw& raw, std::uint32_t m) const {
    Polynomial p;
    p.var_count = m;
    for (const auto& [e, c] : raw) {
      std::vector<std::uint32_t> full(m, 0);
      std::copy(e.begin(), e.end(), full.begin());
      p.terms.emplace(std::move(full), c);
    }
    return p;
  }

  DioSystem parse() {
    std::vector<std::pair<Raw, Raw>> eqs;
    while (i < s.size()) {
      skip_blank();
      if (peek() == '#') {
        while (i < s.size() && peek() != '\n') advance();
      }
      if (peek() == '\n') { advance(); continue; }
      if (i >= s.size()) break;
      Raw lhs = expr();
      skip_blank();
      if (peek() != '=') fail("expected '='");
      advance();
      Raw rhs = expr();
      skip_blank();
      if (peek() == '#')
        while (i < s.size() && peek() != '\n') advance();
      if (i < s.size() && peek() != '\n') fail("unexpected input after equation");
      eqs.emplace_back(std::move(lhs), std::move(rhs));
    }
    if (eqs.empty()) throw DomainError("diophantine system has no equations");
    std::uint32_t m = std::max<std::uint32_t>(max_var, 1);
    DioSystem d;
    d.var_count = m;
    for (auto& [l, r] : eqs) d.equations.push_back({finalize(l, m), finalize(r, m)});
    return d;
  }
};

Integer horner_rec(const std::map<std::vector<std::uint32_t>, Integer>& terms,
                   const std::vector<Natural>& point, std::uint32_t var) {
  if (terms.empty()) return Integer(0);
  if (var == 0) {
    // Only the constant monomial can remain.
    Integer acc = 0;
    for (const auto& [e, c] : terms) acc += c;
    return acc;
  }
  // Group by the exponent of x_var; coefficients are polynomials in the rest.
  std::map<std::uint32_t, std::map<std::vector<std::uint32_t>, Integer>> groups;
  for (const auto& [e, c] : terms) {
    std::vector<std::uint32_t> rest = e;
    std::uint32_t k = rest[var - 1];
    rest[var - 1] = 0;
    groups[k].emplace(std::move(rest), c);
  }
  std::uint32_t top = groups.rbegin()->first;
  const Natural& x = point[var - 1];
  Integer acc = 0;
  for (std::uint32_t j = top + 1; j-- > 0;) {
    acc *= x;
    auto it = groups.find(j);
    if (it != groups.end()) acc += horner_rec(it->second, point, var - 1);
  }
  return acc;
}

}  // namespace

DioSystem parse_dio(std::string_view text) {
  DioParser p{text};
  return p.parse();
}

Integer horner_eval(const Polynomial& p, const std::vector<Natural>& point) {
  if (point.size() != p.var_count)
    throw DomainError("point arity does not match the variable count");
  return horner_rec(p.terms, point, p.var_count);
}

std::optional<BruteForceHit> brute_force_search(const DioSystem& d, const Natural& budget) {
  for (Natural n = 0; n <= budget; ++n) {
    std::vector<Natural> tuple = cantor_m(d.var_count, n);
    bool solves = true;
    for (const auto& eq : d.equations) {
      if (horner_eval(eq.lhs, tuple) != horner_eval(eq.rhs, tuple)) {
        solves = false;
        break;
      }
    }
    if (solves) return BruteForceHit{std::move(tuple), n};
  }
  return std::nullopt;
}

}  // namespace prcalc
