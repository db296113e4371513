#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prcalc/code.hpp"
#include "prcalc/natural.hpp"
#include "prcalc/term.hpp"

namespace prcalc {

// Sparse multivariate polynomial with integer coefficients. Keys are
// exponent vectors of length var_count; zero coefficients are never stored.
struct Polynomial {
  std::uint32_t var_count = 0;
  std::map<std::vector<std::uint32_t>, Integer> terms;

  static Polynomial constant(std::uint32_t m, Integer c);
  static Polynomial variable(std::uint32_t m, std::uint32_t index);  // 1-based

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial negated() const;

  // Split into the positive part and the negated negative part, so that
  // *this == positive - negative with natural coefficients on both sides.
  std::pair<Polynomial, Polynomial> split_signs() const;

  std::uint32_t degree_in(std::uint32_t index) const;  // 1-based variable index
};

struct DioEquation {
  Polynomial lhs, rhs;
};

// k >= 1 equations over variables x1..xm with natural-number unknowns.
struct DioSystem {
  std::uint32_t var_count = 0;
  std::vector<DioEquation> equations;
};

// One equation per line, '#' comments, +, -, *, ^, parentheses, integer
// coefficients, variables x1..xm; m is the highest index that occurs.
DioSystem parse_dio(std::string_view text);  // ParseError, DomainError

// Iterated Horner evaluation: a polynomial in the last variable whose
// coefficients are polynomials in the remaining ones, recursively.
Integer horner_eval(const Polynomial& p, const std::vector<Natural>& point);

struct BruteForceHit {
  std::vector<Natural> tuple;
  Natural index;  // the Cantor index of the tuple
};

// Scans n = 0..budget through the Cantor enumeration of tuples and returns
// the first tuple solving every equation.
std::optional<BruteForceHit> brute_force_search(const DioSystem& d, const Natural& budget);

struct CompileOptions {
  std::uint64_t max_nodes = 1'000'000;         // term construction cap
  std::uint64_t max_coefficient = 100'000;     // numeral chain cap
};

// The unary predicate of the system: psi(n) = [some equation differs at the
// tuple cantor_m(n)], so psi(n) = 0 exactly when cantor_m(n) solves the
// system. Returns the term and its Goedel code. Negative coefficients are
// moved across the equality, so both compiled sides are natural.
Term compile_predicate_term(const DioSystem& d, const CompileOptions& opts = {});
Code compile_predicate(const DioSystem& d, const CompileOptions& opts = {});

}  // namespace prcalc
