#include "prcalc/code.hpp"

#include <algorithm>

#include "prcalc/cantor.hpp"
#include "prcalc/errors.hpp"

namespace prcalc {

struct Code::Rep {
  // Leaf: value set, children empty. Pair: children set.
  std::shared_ptr<const Rep> a, b;
  Natural value;        // leaves only
  std::uint64_t bits;   // exact for leaves, lower bound for pairs
  std::size_t h;
  bool leaf;
};

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

std::shared_ptr<const Code::Rep> make_leaf(Natural v) {
  std::uint64_t bits = bit_length(v);
  std::size_t h = mix(0x1eaf, hash_natural(v));
  return std::make_shared<const Code::Rep>(
      Code::Rep{nullptr, nullptr, std::move(v), bits, h, true});
}

const std::shared_ptr<const Code::Rep>& zero_rep() {
  static const auto r = make_leaf(Natural(0));
  return r;
}

}  // namespace

Code::Code() : rep_(zero_rep()) {}

Code Code::from_natural(const Natural& n) {
  if (bit_length(n) <= kLeafBits) return Code(make_leaf(n));
  auto [x, y] = cantor_unpair(n);
  return pair(from_natural(x), from_natural(y));
}

Code Code::from_u64(std::uint64_t n) {
  return Code(make_leaf(Natural(static_cast<unsigned long>(n))));
}

Code Code::pair(const Code& a, const Code& b) {
  if (a.rep_->leaf && b.rep_->leaf) {
    Natural v = cantor_pair(a.rep_->value, b.rep_->value);
    std::uint64_t bits = bit_length(v);
    if (bits <= kLeafBits) return Code(make_leaf(std::move(v)));
    std::size_t h = mix(mix(0xc0de, a.hash()), b.hash());
    return Code(std::make_shared<const Rep>(Rep{a.rep_, b.rep_, Natural(0), bits, h, false}));
  }
  std::uint64_t child = std::max(a.rep_->bits, b.rep_->bits);
  std::uint64_t bits = std::max(child > 1 ? 2 * child - 2 : child, kLeafBits + 1);
  std::size_t h = mix(mix(0xc0de, a.hash()), b.hash());
  return Code(std::make_shared<const Rep>(Rep{a.rep_, b.rep_, Natural(0), bits, h, false}));
}

std::pair<Code, Code> Code::unpair() const {
  if (rep_->leaf) {
    auto [x, y] = cantor_unpair(rep_->value);
    return {Code(make_leaf(std::move(x))), Code(make_leaf(std::move(y)))};
  }
  return {Code(rep_->a), Code(rep_->b)};
}

bool Code::small() const { return rep_->leaf; }

const Natural& Code::leaf_value() const {
  if (!rep_->leaf) throw CodeSizeError("code exceeds the leaf threshold");
  return rep_->value;
}

std::uint64_t Code::bits_lower_bound() const { return rep_->bits; }

Natural Code::to_natural(std::uint64_t max_bits) const {
  if (rep_->bits > max_bits)
    throw CodeSizeError("code needs at least " + std::to_string(rep_->bits) +
                        " bits, cap is " + std::to_string(max_bits));
  if (rep_->leaf) return rep_->value;
  Natural x = Code(rep_->a).to_natural(max_bits);
  Natural y = Code(rep_->b).to_natural(max_bits);
  Natural v = cantor_pair(x, y);
  if (bit_length(v) > max_bits)
    throw CodeSizeError("code needs " + std::to_string(bit_length(v)) +
                        " bits, cap is " + std::to_string(max_bits));
  return v;
}

std::string Code::to_decimal(std::uint64_t max_bits) const {
  return to_natural(max_bits).get_str();
}

bool Code::operator==(const Code& o) const {
  if (rep_ == o.rep_) return true;
  if (rep_->h != o.rep_->h || rep_->leaf != o.rep_->leaf) return false;
  if (rep_->leaf) return rep_->value == o.rep_->value;
  return Code(rep_->a) == Code(o.rep_->a) && Code(rep_->b) == Code(o.rep_->b);
}

bool Code::equals_natural(const Natural& k) const {
  if (rep_->leaf) return rep_->value == k;
  if (bit_length(k) <= kLeafBits) return false;  // pairs always exceed the threshold
  return *this == from_natural(k);
}

bool Code::leq_natural(const Natural& k) const {
  if (rep_->leaf) return rep_->value <= k;
  std::uint64_t kb = bit_length(k);
  if (rep_->bits > kb) return false;
  try {
    return to_natural(kb + 2) <= k;
  } catch (const CodeSizeError&) {
    return false;
  }
}

std::size_t Code::hash() const { return rep_->h; }

const void* Code::node_id() const { return rep_.get(); }

}  // namespace prcalc
