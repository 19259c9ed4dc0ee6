#include <doctest.h>

#include <random>

#include "ivgame/coord.hpp"
#include "ivgame/errors.hpp"
#include "support.hpp"

using namespace ivgame;
using ivgame::testing::q;

TEST_CASE("midpoint of 0 and 1 is 1/2") {
  CHECK(midpoint(Coord::zero(), Coord::one()) == q(1, 1));
}

TEST_CASE("midpoint of 1/4 and 1/2 is 3/8") {
  CHECK(midpoint(q(1, 2), q(1, 1)) == q(3, 3));
}

TEST_CASE("first separation interval from gaps [0,1/4] and [1/2,1] is [1/8,3/4]") {
  CHECK(midpoint(Coord::zero(), q(1, 2)) == q(1, 3));
  CHECK(midpoint(q(1, 1), Coord::one()) == q(3, 2));
}

TEST_CASE("midpoint rejects unordered arguments") {
  CHECK_THROWS_AS(midpoint(q(1, 1), q(1, 2)), GameError);
  try {
    midpoint(q(1, 1), q(1, 1));
    FAIL("expected invalid-order");
  } catch (const GameError& e) {
    CHECK(e.kind() == ErrorKind::invalid_order);
  }
}

TEST_CASE("representation is normalized") {
  Coord c = Coord::from_parts(6, 4);
  CHECK(c.numerator() == 3);
  CHECK(c.log2_denominator() == 3);
  CHECK(Coord::from_parts(8, 3) == Coord::one());
  CHECK(Coord::one().to_string() == "1/2^0");
  CHECK(Coord::zero().to_string() == "0/2^0");
  CHECK(Coord::from_parts(0, 9) == Coord::zero());
  CHECK_THROWS_AS(Coord::from_parts(9, 3), GameError);
}

TEST_CASE("string form round-trips and rejects other spellings") {
  for (auto text : {"13/2^5", "1/2^0", "0/2^0", "3/2^62"}) CHECK(Coord::parse(text).to_string() == text);
  for (auto text : {"2/2^2", "13/32", "x/2^3", "1/2^", "/2^3", "5/2^2", "1/2^63", "-1/2^1"})
    CHECK_THROWS_AS(Coord::parse(text), GameError);
}

TEST_CASE("denominators past 2^62 are reported as overflow") {
  Coord a = Coord::zero(), b = q(1, 62);
  try {
    midpoint(a, b);
    FAIL("expected overflow");
  } catch (const GameError& e) {
    CHECK(e.kind() == ErrorKind::overflow);
  }
}

TEST_CASE("reflection through walls") {
  CHECK(reflect(Coord::zero(), Coord::one(), q(1, 2)) == q(3, 2));
  CHECK(reflect(q(1, 2), q(3, 2), q(5, 3)) == q(3, 3));
  CHECK(reflect(q(1, 2), q(3, 2), q(1, 2)) == q(3, 2));
}

TEST_CASE("midpoint is strictly between its arguments and comparisons are exact") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    unsigned e1 = rng() % 40, e2 = rng() % 40;
    Coord a = Coord::from_parts(rng() % ((std::uint64_t{1} << e1) + 1), e1);
    Coord b = Coord::from_parts(rng() % ((std::uint64_t{1} << e2) + 1), e2);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    Coord m = midpoint(a, b);
    CHECK(a < m);
    CHECK(m < b);
    CHECK(m.to_double() == doctest::Approx((a.to_double() + b.to_double()) / 2));
    CHECK(Coord::parse(m.to_string()) == m);
  }
}
