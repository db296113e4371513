#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "prcalc/code.hpp"
#include "prcalc/obj.hpp"
#include "prcalc/term.hpp"

namespace prcalc {

// Goedel numbering. A full code is cantor_pair(kind, body) with kind 0 for
// objects and kind 1 for terms. Term bodies are cantor_pair(tag, payload)
// with the tags of TermTag; payloads pair child term bodies and object
// bodies in field order. Object bodies use tags 0 = 1, 1 = N, 2 = product.
Code code_of(const Term& f);     // TypeError if f is ill-typed
Code code_of_obj(const Obj& a);

Term decode(const Code& c);      // DecodeError if c is not a valid term code
Obj decode_obj(const Code& c);   // DecodeError if c is not an object code

// c is the code of a well-typed term.
bool is_pr_code(const Code& c);

// c codes a unary predicate N -> 2: well-typed, domain N, and Boolean by
// construction. Qualifying shapes: codomain 1 (the constantly false
// predicate), a root combinator from {eq, sign, not, and, or} reached along
// the outer spine of compositions, or a constant 0/1 numeral composed with
// a map into 1.
bool is_pred_code(const Code& c);

std::uint64_t depth_code(const Code& c);  // DecodeError on invalid codes
TermType infer_code(const Code& c);       // DecodeError on invalid codes

// Structure analysis on code numbers by tag arithmetic, memoized per node.
// Everything here works on the codes themselves; terms are never built.
class CodeAnalyzer {
 public:
  struct Info {
    bool valid = false;
    TermTag tag{};
    std::optional<Code> child_v, child_u;  // term bodies (Comp both, Cyl/Iter one)
    std::optional<Obj> obj_a, obj_b;       // decoded object annotations
    std::optional<Obj> dom, cod;           // set iff valid
    std::uint64_t depth = 0;               // set iff valid
    std::string why;                       // set iff invalid
  };

  // Analysis of a term body (the part after the kind discriminator).
  const Info& body(const Code& body_code);

  // Kind-strips a full code; DecodeError unless kind = 1 and the body is a
  // well-typed term.
  Code term_body_checked(const Code& full);
  const Info& full_info(const Code& full) { return body(term_body_checked(full)); }

  std::optional<Obj> object_body(const Code& body_code);

 private:
  struct Entry {
    Code self;  // pins the node
    Info info;
  };
  const Info& analyze(const Code& body_code, int depth_guard);
  std::optional<Obj> object_body_guarded(const Code& body_code, int depth_guard);
  std::unordered_map<const void*, Entry> cache_;
  std::unordered_map<const void*, std::pair<Code, std::optional<Obj>>> obj_cache_;
  // Kind-strip results; keeps body node identity stable across calls, which
  // the evaluator's per-node caches rely on.
  std::unordered_map<const void*, std::pair<Code, Code>> strip_cache_;
};

}  // namespace prcalc
