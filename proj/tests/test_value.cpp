#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <prcalc/cantor.hpp>
#include <prcalc/errors.hpp>
#include <prcalc/value.hpp>

using namespace prcalc;

TEST_CASE("membership") {
  CHECK(member(Value::num(Natural(0)), Obj::one()));
  CHECK_FALSE(member(Value::num(Natural(1)), Obj::one()));
  CHECK(member(Value::num(Natural(1)), Obj::nat()));
  CHECK(member(Value::pair(Value::num(Natural(1)), Value::num(Natural(2))),
               Obj::prod(Obj::nat(), Obj::nat())));
  CHECK_FALSE(member(Value::num(Natural(3)), Obj::prod(Obj::nat(), Obj::nat())));
  // 1 is a subset of N; naturals and pairs are otherwise disjoint
  CHECK(member(Value::num(Natural(0)), Obj::nat()));
  CHECK_FALSE(member(Value::pair(Value::num(Natural(0)), Value::num(Natural(0))), Obj::nat()));
}

TEST_CASE("value literals") {
  CHECK(Value::parse("12").as_num() == 12);
  Value v = Value::parse(" ( (1, 2 ) , 3 )");
  CHECK(v.show() == "((1,2),3)");
  CHECK(Value::parse(v.show()) == v);
  CHECK_THROWS_AS((void)Value::parse("(1,2"), ParseError);
  CHECK_THROWS_AS((void)Value::parse("x"), ParseError);
  CHECK_THROWS_AS((void)Value::parse("1,2"), ParseError);
}

TEST_CASE("cantor pairing base points") {
  CHECK(cantor_pair(Natural(0), Natural(0)) == 0);
  CHECK(cantor_pair(Natural(3), Natural(2)) == 18);
  CHECK(cantor_pair(Natural(1), Natural(0)) == 2);
}

TEST_CASE("cantor roundtrips") {
  for (std::uint64_t x = 0; x < 200; ++x)
    for (std::uint64_t y = 0; y < 200; y += 7) {
      auto [a, b] = cantor_unpair(cantor_pair(Natural(x), Natural(y)));
      CHECK(a == x);
      CHECK(b == y);
    }
  for (std::uint64_t n = 0; n < 5000; ++n) {
    auto [x, y] = cantor_unpair(Natural(n));
    CHECK(cantor_pair(x, y) == n);
  }
  // huge values survive the arithmetic
  Natural big = Natural("123456789123456789123456789");
  auto [hx, hy] = cantor_unpair(big);
  CHECK(cantor_pair(hx, hy) == big);
}

TEST_CASE("cantor pairing is monotone along diagonals") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Natural prev(-1);
    for (std::uint64_t x = 0; x <= s; ++x) {
      Natural p = cantor_pair(Natural(x), Natural(s - x));
      CHECK(p > prev);
      prev = p;
    }
  }
}

TEST_CASE("m-tupling") {
  CHECK_THROWS_AS((void)cantor_m(0, Natural(1)), DomainError);
  CHECK_THROWS_AS((void)cantor_m_inv({}), DomainError);

  auto t = cantor_m(1, Natural(7));
  REQUIRE(t.size() == 1);
  CHECK(t[0] == 7);

  // the last coordinate is unfolded first
  auto p = cantor_m(2, Natural(18));
  CHECK(p[0] == 3);
  CHECK(p[1] == 2);

  for (std::uint32_t m = 1; m <= 4; ++m)
    for (std::uint64_t n = 0; n < 2000; ++n)
      CHECK(cantor_m_inv(cantor_m(m, Natural(n))) == n);

  for (std::uint64_t x = 0; x < 30; x += 5)
    for (std::uint64_t y = 0; y < 30; y += 7)
      for (std::uint64_t z = 0; z < 30; z += 11) {
        std::vector<Natural> tuple{Natural(x), Natural(y), Natural(z)};
        CHECK(cantor_m(3, cantor_m_inv(tuple)) == tuple);
      }
}
