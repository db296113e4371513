#pragma once

#include <stdexcept>
#include <string>

namespace prcalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Typing judgment failed; `path` walks from the root to the offending subterm.
struct TypeError : Error {
  std::string path;
  TypeError(const std::string& msg, std::string path_ = "")
      : Error(path_.empty() ? msg : msg + " (at " + path_ + ")"), path(std::move(path_)) {}
};

struct ParseError : Error {
  int line, column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
        line(line_), column(column_) {}
};

struct DomainError : Error {
  using Error::Error;
};

struct DecodeError : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct PredicateContractViolation : Error {
  using Error::Error;
};

struct CompileError : Error {
  using Error::Error;
};

// A number is too large to materialize under the requested cap.
struct CodeSizeError : Error {
  using Error::Error;
};

// A race or scan would need more literal steps than the engine permits
// and no closed form applies.
struct EngineLimitError : Error {
  using Error::Error;
};

}  // namespace prcalc
