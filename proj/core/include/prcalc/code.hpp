#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "prcalc/natural.hpp"

namespace prcalc {

// An exact natural number built from Cantor pairings. Values whose bit
// length is at most kLeafBits are held as plain integers; larger values
// are held as unevaluated pairings of their two preimages. The
// representation is canonical (a node is a leaf iff the value fits), so
// structural equality coincides with numeric equality while numbers far
// beyond physical memory stay usable through pair/unpair.
class Code {
 public:
  static constexpr std::uint64_t kLeafBits = 4096;

  Code();                                        // the number 0
  static Code from_natural(const Natural& n);
  static Code from_u64(std::uint64_t n);
  static Code pair(const Code& a, const Code& b);  // cantor_pair(a, b)

  std::pair<Code, Code> unpair() const;  // exact; unpair(0) = (0,0)

  bool small() const;                    // materialized leaf
  const Natural& leaf_value() const;     // small() only

  // Lower bound on the bit length; exact whenever small().
  std::uint64_t bits_lower_bound() const;

  // Materializes the number; CodeSizeError if it exceeds max_bits bits.
  Natural to_natural(std::uint64_t max_bits) const;
  std::string to_decimal(std::uint64_t max_bits) const;

  bool operator==(const Code& o) const;  // numeric equality
  bool operator!=(const Code& o) const { return !(*this == o); }
  bool equals_natural(const Natural& k) const;
  bool leq_natural(const Natural& k) const;

  std::size_t hash() const;
  const void* node_id() const;  // stable identity for per-node caches

  struct Rep;

 private:
  explicit Code(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}
  std::shared_ptr<const Rep> rep_;
};

struct CodeHash {
  std::size_t operator()(const Code& c) const { return c.hash(); }
};

}  // namespace prcalc
