#include "prcalc/cantor.hpp"

#include "prcalc/errors.hpp"

namespace prcalc {

Natural cantor_pair(const Natural& x, const Natural& y) {
  Natural s = x + y;
  return s * (s + 1) / 2 + x;
}

std::pair<Natural, Natural> cantor_unpair(const Natural& n) {
  // s = floor((sqrt(8n+1) - 1) / 2) is the diagonal index.
  Natural r;
  Natural t = 8 * n + 1;
  mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
  Natural s = (r - 1) / 2;
  Natural x = n - s * (s + 1) / 2;
  Natural y = s - x;
  return {x, y};
}

std::vector<Natural> cantor_m(std::uint32_t m, const Natural& n) {
  if (m == 0) throw DomainError("cantor_m: m must be >= 1");
  std::vector<Natural> out(m);
  Natural rest = n;
  for (std::uint32_t i = m; i > 1; --i) {
    auto [prefix, last] = cantor_unpair(rest);
    out[i - 1] = last;
    rest = prefix;
  }
  out[0] = rest;
  return out;
}

Natural cantor_m_inv(const std::vector<Natural>& tuple) {
  if (tuple.empty()) throw DomainError("cantor_m_inv: empty tuple");
  Natural acc = tuple[0];
  for (std::size_t i = 1; i < tuple.size(); ++i) acc = cantor_pair(acc, tuple[i]);
  return acc;
}

}  // namespace prcalc
