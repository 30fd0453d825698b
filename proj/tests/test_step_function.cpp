#include <doctest.h>

#include "ufpsched/step_function.hpp"

using namespace ufpsched;

TEST_CASE("step function evaluation is right-continuous with implicit 0") {
  StepCostFunction f({{Rat(2), Rat(5)}, {Rat(4), Rat(7)}});
  CHECK(f.eval(Rat(0)) == 0);
  CHECK(f.eval(rat(3, 2)) == 0);
  CHECK(f.eval(Rat(2)) == 5);   // value jumps at the breakpoint itself
  CHECK(f.eval(rat(7, 2)) == 5);
  CHECK(f.eval(Rat(4)) == 7);
  CHECK(f.eval(Rat(100)) == 7);
  CHECK_THROWS_AS(f.eval(Rat(-1)), std::invalid_argument);
}

TEST_CASE("validation rejects malformed breakpoints") {
  CHECK_THROWS_AS(StepCostFunction({{Rat(2), Rat(1)}, {Rat(2), Rat(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(StepCostFunction({{Rat(2), Rat(3)}, {Rat(4), Rat(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(StepCostFunction({{Rat(-1), Rat(1)}}), std::invalid_argument);
}

TEST_CASE("increase points skip flat steps") {
  StepCostFunction f({{Rat(1), Rat(2)}, {Rat(3), Rat(2)}, {Rat(5), Rat(9)}});
  CHECK(f.increasePoints() == std::vector<Rat>{Rat(1), Rat(5)});
  StepCostFunction zero({{Rat(1), Rat(0)}});
  CHECK(zero.increasePoints().empty());
}

TEST_CASE("unavailable-after cutoff") {
  StepCostFunction f({{Rat(1), Rat(2)}}, Rat(6));
  CHECK(f.availableAt(Rat(6)));
  CHECK_FALSE(f.availableAt(Rat(7)));
  CHECK_THROWS(f.eval(Rat(7)));
}

TEST_CASE("scaled and constant") {
  StepCostFunction f({{Rat(1), Rat(2)}, {Rat(4), Rat(5)}});
  StepCostFunction g = f.scaled(Rat(3));
  CHECK(g.eval(Rat(1)) == 6);
  CHECK(g.eval(Rat(4)) == 15);
  CHECK(StepCostFunction::constant(Rat(7)).eval(Rat(0)) == 7);
  CHECK(f == f);
  CHECK_FALSE(f == g);
  CHECK(f.maxValue() == 5);
}
