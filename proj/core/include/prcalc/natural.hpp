#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

namespace prcalc {

// Arbitrary-precision natural number. All library entry points keep the
// invariant value >= 0; Integer is the same type used where signs occur
// (polynomial coefficients).
using Natural = mpz_class;
using Integer = mpz_class;

std::size_t hash_natural(const Natural& n);

// Number of bits in the binary expansion; bit_length(0) == 0.
std::uint64_t bit_length(const Natural& n);

bool fits_u64(const Natural& n);
std::uint64_t to_u64(const Natural& n);  // DomainError if it does not fit

Natural natural_from_string(const std::string& text);  // decimal or 0x-prefixed hex

struct NaturalHash {
  std::size_t operator()(const Natural& n) const { return hash_natural(n); }
};

}  // namespace prcalc
