#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "prcalc/natural.hpp"

namespace prcalc {

// Diagonal pairing pi(x,y) = (x+y)(x+y+1)/2 + x, a bijection N x N -> N.
Natural cantor_pair(const Natural& x, const Natural& y);
std::pair<Natural, Natural> cantor_unpair(const Natural& n);

// Tupling N -> N^m. The last coordinate is unfolded first:
// cantor_m(m, n) = (prefix..., x_m) with cantor_unpair(n) = (n', x_m)
// and the prefix obtained by recursion on n'. m = 1 is the identity.
std::vector<Natural> cantor_m(std::uint32_t m, const Natural& n);  // DomainError if m == 0
Natural cantor_m_inv(const std::vector<Natural>& tuple);           // DomainError if empty

}  // namespace prcalc
