#include <stdexcept>

#include "doctest.h"
#include "seacheck/instances.hpp"
#include "seacheck/rational.hpp"

using namespace seacheck;

TEST_CASE("rationals normalize and compare exactly") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(1, 2) * Rational(1, 2) == Rational(1, 4));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 1) - Rational(1, 4) == Rational(3, 4));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 6).str() == "1/3");
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("boolean instance") {
  BooleanInstance inst(2);
  CHECK(inst.carrier().size() == 4);
  CHECK(inst.render(0) == "{}");
  CHECK(inst.render(3) == "{1,2}");
  CHECK(inst.oplus(1, 2) == 3u);      // disjoint union
  CHECK(!inst.oplus(1, 3));           // overlap: undefined
  CHECK(inst.circ(3, 2) == 2u);
  CHECK(inst.zero() == 0u);
  CHECK(inst.one() == 3u);
  CHECK(inst.exhaustive());

  CHECK_THROWS_AS(BooleanInstance(0), std::out_of_range);
  CHECK_THROWS_AS(BooleanInstance(6), std::out_of_range);
}

TEST_CASE("interval instance") {
  IntervalInstance inst(6);
  CHECK(inst.carrier().size() == 7);
  CHECK(inst.circ(Rational(1, 2), Rational(1, 2)) == Rational(1, 4));
  CHECK(inst.oplus(Rational(1, 2), Rational(1, 3)) == Rational(5, 6));
  CHECK(!inst.oplus(Rational(5, 6), Rational(1, 2)));  // sum above 1
  CHECK(inst.render(Rational(2, 6)) == "1/3");
  CHECK(!inst.exhaustive());

  // sharpness on the grid: squaring moves everything strictly inside
  CHECK(inst.circ(Rational(1, 2), Rational(1, 2)) != Rational(1, 2));

  CHECK_THROWS_AS(IntervalInstance(1), std::out_of_range);
  CHECK_THROWS_AS(IntervalInstance(25), std::out_of_range);
}
