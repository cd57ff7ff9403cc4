#include "halfdepth/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace halfdepth;

TEST_CASE("doubles convert exactly") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-3.0) == Rational(-3));
  CHECK(rational_from_double(0.1) != Rational(1, 10));  // 0.1 is not dyadic
  CHECK(rational_to_double(rational_from_double(0.1)) == 0.1);
  CHECK_THROWS_AS(rational_from_double(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("parsing and printing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(rational_to_string(Rational(3, 4)) == "3/4");
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("floor and ceil") {
  CHECK(floor_rational(Rational(7, 2)) == 3);
  CHECK(floor_rational(Rational(-7, 2)) == -4);
  CHECK(ceil_rational(Rational(7, 2)) == 4);
  CHECK(ceil_rational(Rational(-7, 2)) == -3);
  CHECK(floor_rational(Rational(4)) == 4);
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_rational_in(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(simplest_rational_in(Rational(-1, 10), Rational(1, 10)) == 0);
  CHECK(simplest_rational_in(Rational(2), Rational(3)) == 2);
  // Snapping windows around exact values recover them.
  const Rational v(7, 3);
  CHECK(simplest_rational_in(v - Rational(1, 1000000), v + Rational(1, 1000000)) == v);
  const Rational w(-13, 7);
  CHECK(simplest_rational_in(w - Rational(1, 1000000), w + Rational(1, 1000000)) == w);
  CHECK(simplest_rational_in(Rational(999999, 1000000), Rational(1000001, 1000000)) == 1);
  CHECK_THROWS_AS(simplest_rational_in(Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("simplest rational prefers small denominators") {
  const Rational got = simplest_rational_in(Rational(3, 10), Rational(2, 5));
  CHECK(got == Rational(1, 3));  // 1/3 lies inside [0.3, 0.4]
}
