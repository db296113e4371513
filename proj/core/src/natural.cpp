#include "prcalc/natural.hpp"

#include <cctype>

#include "prcalc/errors.hpp"

namespace prcalc {

std::size_t hash_natural(const Natural& n) {
  // FNV-1a over the limb array; sign is irrelevant for naturals.
  std::size_t h = 14695981039346656037ull;
  const auto* z = n.get_mpz_t();
  std::size_t limbs = mpz_size(z);
  const mp_limb_t* p = mpz_limbs_read(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    mp_limb_t limb = p[i];
    for (unsigned b = 0; b < sizeof(mp_limb_t); ++b) {
      h ^= static_cast<std::size_t>(limb & 0xff);
      h *= 1099511628211ull;
      limb >>= 8;
    }
  }
  return h;
}

std::uint64_t bit_length(const Natural& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

bool fits_u64(const Natural& n) {
  return n >= 0 && bit_length(n) <= 64;
}

std::uint64_t to_u64(const Natural& n) {
  if (!fits_u64(n)) throw DomainError("number does not fit in 64 bits");
  std::uint64_t lo = mpz_get_ui(n.get_mpz_t());
  if (sizeof(unsigned long) == 8 || bit_length(n) <= 32) return lo;
  Natural hi = n >> 32;
  return (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) | lo;
}

Natural natural_from_string(const std::string& text) {
  std::string s = text;
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s = s.substr(2);
    base = 16;
  }
  if (s.empty()) throw DomainError("empty number literal");
  for (char c : s) {
    bool ok = base == 10 ? std::isdigit(static_cast<unsigned char>(c))
                         : std::isxdigit(static_cast<unsigned char>(c));
    if (!ok) throw DomainError("invalid digit in number literal: " + text);
  }
  Natural n;
  if (mpz_set_str(n.get_mpz_t(), s.c_str(), base) != 0)
    throw DomainError("invalid number literal: " + text);
  return n;
}

}  // namespace prcalc
