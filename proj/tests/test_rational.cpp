#include <doctest.h>

#include "ufpsched/rational.hpp"

using namespace ufpsched;

TEST_CASE("ratPow handles positive, zero and negative exponents") {
  CHECK(ratPow(rat(3, 2), 0) == 1);
  CHECK(ratPow(rat(3, 2), 4) == rat(81, 16));
  CHECK(ratPow(rat(3, 2), -2) == rat(4, 9));
  CHECK(ratPow(rat(-2), 3) == rat(-8));
  CHECK_THROWS_AS(ratPow(Rat(0), 2), std::domain_error);
}

TEST_CASE("floorLog and ceilLog bracket exactly") {
  CHECK(floorLog(rat(3, 2), Rat(4)) == 3);   // 1.5^3 = 3.375 <= 4 < 5.0625
  CHECK(ceilLog(rat(3, 2), Rat(4)) == 4);
  CHECK(floorLog(Rat(2), Rat(8)) == 3);
  CHECK(ceilLog(Rat(2), Rat(8)) == 3);       // exact power
  CHECK(floorLog(rat(3, 2), rat(1, 3)) == -3);
  CHECK_THROWS_AS(floorLog(Rat(1), Rat(2)), std::domain_error);
  CHECK_THROWS_AS(floorLog(Rat(2), Rat(0)), std::domain_error);

  for (long k = -6; k <= 6; ++k) {
    const Rat p = ratPow(rat(5, 4), k);
    CHECK(floorLog(rat(5, 4), p) == k);
    CHECK(ceilLog(rat(5, 4), p) == k);
  }
}

TEST_CASE("ceilDiv and floorDiv on rationals") {
  CHECK(ceilDiv(rat(7, 2)) == 4);
  CHECK(floorDiv(rat(7, 2)) == 3);
  CHECK(ceilDiv(Rat(3)) == 3);
  CHECK(floorDiv(rat(-7, 2)) == -4);
  CHECK(ceilDiv(rat(-7, 2)) == -3);
}

TEST_CASE("string round trip and validation") {
  CHECK(ratFromString("22/7") == rat(22, 7));
  CHECK(ratFromString("-5") == rat(-5));
  CHECK(ratToString(rat(4, 6)) == "2/3");  // canonicalized
  CHECK_THROWS_AS(ratFromString("abc"), std::invalid_argument);
  CHECK(isInteger(rat(4, 2)));
  CHECK_FALSE(isInteger(rat(1, 3)));
}
