#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "ufpsched/oracles.hpp"
#include "ufpsched/speedup.hpp"

using namespace ufpsched;

namespace {

StepCostFunction ramp(long horizon, long slope) {
  std::vector<std::pair<Rat, Rat>> bps;
  for (long t = 1; t <= horizon; ++t) bps.emplace_back(Rat(t), Rat(slope * t));
  return StepCostFunction(std::move(bps));
}

GspInstance randomInstance(std::mt19937& rng, int n, int maxP) {
  std::uniform_int_distribution<int> pd(1, maxP), vd(0, 6);
  GspInstance inst;
  long P = 0;
  std::vector<long> ps;
  for (int i = 0; i < n; ++i) {
    ps.push_back(pd(rng));
    P += ps.back();
  }
  for (int i = 0; i < n; ++i) {
    Job j;
    j.id = i;
    j.p = ps[i];
    std::vector<std::pair<Rat, Rat>> bps;
    Rat v(vd(rng));
    for (long t = 1; t <= P; ++t) {
      v += vd(rng) == 0 ? Rat(1 + vd(rng)) : Rat(0);
      bps.emplace_back(Rat(t), v);
    }
    j.f = StepCostFunction(std::move(bps));
    inst.jobs.push_back(std::move(j));
  }
  return inst;
}

}  // namespace

TEST_CASE("artificial releases and completion rounding") {
  const Rat half = rat(1, 2);
  CHECK(artificialRelease(12, half) == ratPow(rat(3, 2), 3));
  CHECK(artificialRelease(1, half) == ratPow(rat(3, 2), -3));
  CHECK(roundCompletion(Rat(4), half) == ratPow(rat(3, 2), 4));
  CHECK(roundCompletion(ratPow(rat(3, 2), 2), half) == ratPow(rat(3, 2), 2));
}

TEST_CASE("interval grid fine points") {
  CHECK(IntervalGrid(Rat(1)).pointsPerInterval == 8);
  CHECK(IntervalGrid(rat(1, 3)).pointsPerInterval == 144);
  IntervalGrid g(rat(1, 2));
  CHECK(g.pointsPerInterval == 48);
  CHECK(g.R(2) == rat(9, 4));
  CHECK(g.intervalLength(0) == rat(1, 2));
  CHECK(g.finePoint(0, 48) == rat(3, 2));  // last fine point = next interval start
  CHECK(g.intervalOf(rat(10, 7)) == 0);
  CHECK(g.snapDown(rat(10, 7)) == g.finePoint(0, 41));
  CHECK(g.snapDown(rat(10, 7)) <= rat(10, 7));
  CHECK(g.snapUp(rat(10, 7)) >= rat(10, 7));
  CHECK(g.snapUp(g.finePoint(1, 7)) == g.finePoint(1, 7));  // grid points are fixed
}

TEST_CASE("pattern enumeration matches the independent counting recurrence") {
  IntervalGrid g(Rat(1));  // 8 fine units per interval
  for (long minU : {3L, 8L})
    for (long maxS : {0L, 1L, 2L, 3L}) {
      auto pats = enumeratePatterns(g, minU, maxS);
      std::set<std::tuple<std::vector<std::pair<long, long>>, long, long>> uniq;
      for (const auto& p : pats) uniq.insert({p.slots, p.windowBeg, p.windowEnd});
      CHECK(uniq.size() == pats.size());  // no duplicates
      CHECK((unsigned long long)pats.size() == countPatterns(g.pointsPerInterval, minU, maxS));
    }
}

TEST_CASE("documented speed exponent") {
  CHECK(speedupExponent(rat(1, 2)) == 16);
}

TEST_CASE("reference instance: cheaper than the unit-speed optimum") {
  const Rat half = rat(1, 2);
  GspInstance inst;
  inst.jobs.push_back({1, 2, 0, ramp(12, 1)});
  inst.jobs.push_back({2, 3, 0, ramp(12, 2)});
  auto oracle = exactGspUniformRelease(inst);
  REQUIRE(oracle.cost == 11);
  auto res = solveSpeedup(inst, half);
  REQUIRE(res);
  CHECK(res->cost <= oracle.cost);
  CHECK(res->speedExponent == 16);
  CHECK(res->speed == ratPow(rat(3, 2), 16));
  CHECK(validateSpeedSchedule(inst, res->schedule, res->speed, half));
}

TEST_CASE("single job") {
  GspInstance one;
  one.jobs.push_back({1, 2, 0, ramp(12, 1)});
  auto res = solveSpeedup(one, rat(1, 2));
  REQUIRE(res);
  CHECK(res->cost <= 2);
  CHECK(validateSpeedSchedule(one, res->schedule, res->speed, rat(1, 2)));
}

TEST_CASE("randomized: never above the oracle, always valid") {
  const Rat half = rat(1, 2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> nd(1, 5);
  for (int seed = 0; seed < 40; ++seed) {
    auto inst = randomInstance(rng, nd(rng), 8);
    auto oracle = exactGspUniformRelease(inst);
    auto res = solveSpeedup(inst, half);
    REQUIRE(res);
    CHECK(res->cost <= oracle.cost);
    CHECK(validateSpeedSchedule(inst, res->schedule, res->speed, half));
  }
}

TEST_CASE("non-uniform releases are rejected") {
  GspInstance inst;
  inst.jobs.push_back({1, 2, 1, ramp(12, 1)});
  CHECK_THROWS_AS(solveSpeedup(inst, rat(1, 2)), std::invalid_argument);
}
