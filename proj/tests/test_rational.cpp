#include <doctest.h>

#include "gwall/errors.hpp"
#include "support.hpp"

using namespace gwall;
using gwall::test::q;

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational(" -4/6 ") == q(-2, 3));
  CHECK(parse_rational("7") == q(7));
  CHECK(to_string(q(-10, 4)) == "-5/2");
  CHECK(to_string(q(6, 3)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(parse_rational_list("1/2, -3,0") == QVec{q(1, 2), q(-3), q(0)});
  CHECK(to_string(QVec{q(1, 2), q(-1)}) == "1/2,-1");
}

TEST_CASE("floor, ceil and square roots") {
  CHECK(gwall::floor(q(-1, 2)) == -1);
  CHECK(gwall::ceil(q(-1, 2)) == 0);
  CHECK(gwall::floor(q(7, 2)) == 3);
  CHECK(isqrt_floor(q(36)) == 6);
  CHECK(isqrt_floor(q(35)) == 5);
  CHECK(isqrt_floor(q(1, 4)) == 0);
  Rational r;
  CHECK(rational_sqrt(q(9, 4), r));
  CHECK(r == q(3, 2));
  CHECK_FALSE(rational_sqrt(q(2), r));
  CHECK_FALSE(rational_sqrt(q(-1), r));
}

TEST_CASE("fixed-point rendering") {
  CHECK(format_fixed(q(-9, 2), 6) == "-4.500000");
  CHECK(format_fixed(q(2, 3), 3) == "0.667");
  CHECK(format_fixed(q(-2, 3), 3) == "-0.667");
  CHECK(format_fixed(q(0), 2) == "0.00");
  CHECK(format_sqrt_fixed(q(36), 6) == "6.000000");
  CHECK(format_sqrt_fixed(q(2), 4) == "1.4142");
}

TEST_CASE("vector helpers check dimensions") {
  CHECK_THROWS_AS((QVec{q(1)} + QVec{q(1), q(2)}), DimensionError);
  CHECK((QVec{q(1), q(2)} - QVec{q(1), q(1)}) == QVec{q(0), q(1)});
  CHECK(is_zero(QVec{q(0), q(0)}));
}
