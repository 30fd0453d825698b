#include <doctest.h>

#include <random>

#include "ufpsched/model.hpp"

using namespace ufpsched;

namespace {

StepCostFunction ramp(long horizon, long slope) {
  std::vector<std::pair<Rat, Rat>> bps;
  for (long t = 1; t <= horizon; ++t) bps.emplace_back(Rat(t), Rat(slope * t));
  return StepCostFunction(std::move(bps));
}

GspInstance twoJobs() {
  GspInstance i;
  i.jobs.push_back({1, 2, 0, ramp(10, 1)});
  i.jobs.push_back({2, 3, 0, ramp(10, 2)});
  return i;
}

}  // namespace

TEST_CASE("instance validation") {
  GspInstance i = twoJobs();
  CHECK_NOTHROW(i.validate());
  SUBCASE("duplicate ids rejected") {
    i.jobs[1].id = 1;
    CHECK_THROWS(i.validate());
  }
  SUBCASE("class form must match the scaled global function") {
    i.globalFunctions = {ramp(10, 1)};
    i.weightBound = 2;
    i.jobs[0].classIndex = 0;
    i.jobs[0].weight = 2;  // but f is the unscaled ramp
    CHECK_THROWS(i.validate());
    i.jobs[0].f = ramp(10, 2);
    CHECK_NOTHROW(i.validate());
    i.jobs[0].weight = 3;  // above the declared weight bound
    i.jobs[0].f = ramp(10, 3);
    CHECK_THROWS(i.validate());
  }
  SUBCASE("helpers") {
    CHECK(i.totalProcessing() == 5);
    CHECK(i.uniformRelease());
    CHECK(i.distinctReleases() == std::vector<long>{0});
    CHECK(i.jobById(2).p == 3);
    CHECK_THROWS(i.jobById(99));
  }
}

TEST_CASE("schedule completion and validity") {
  GspInstance i = twoJobs();
  Schedule s;
  s.starts = {{2, Rat(0)}, {1, Rat(3)}};
  CHECK(s.completion(i, 2) == 3);
  CHECK(s.completion(i, 1) == 5);
  CHECK(s.valid(i));
  CHECK(scheduleCost(i, s) == 11);  // 2*3 + 5

  SUBCASE("overlap invalidates") {
    s.starts[1].second = Rat(2);
    CHECK_FALSE(s.valid(i));
  }
  SUBCASE("start before release invalidates") {
    i.jobs[0].r = 4;
    CHECK_FALSE(s.valid(i));
  }
  SUBCASE("speed shortens executions") {
    Schedule fast;
    fast.speed = Rat(2);
    fast.starts = {{2, Rat(0)}, {1, rat(3, 2)}};
    CHECK(fast.completion(i, 2) == rat(3, 2));
    CHECK(fast.valid(i));
  }
}

TEST_CASE("EDD feasibility: frozen examples") {
  GspInstance i = twoJobs();
  DueDateAssignment ok{{1, Rat(5)}, {2, Rat(3)}};
  DueDateAssignment tight{{1, Rat(2)}, {2, Rat(5)}};
  DueDateAssignment bad{{1, Rat(2)}, {2, Rat(4)}};
  CHECK(eddFeasibleSim(i.jobs, ok));
  CHECK(eddFeasibleInterval(i.jobs, ok));
  CHECK(eddFeasibleSim(i.jobs, tight));
  CHECK(eddFeasibleInterval(i.jobs, tight));
  CHECK_FALSE(eddFeasibleSim(i.jobs, bad));
  CHECK_FALSE(eddFeasibleInterval(i.jobs, bad));
}

TEST_CASE("EDD simulation agrees with the interval condition (random)") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 300; ++it) {
    std::uniform_int_distribution<int> nD(1, 4), pD(1, 3), rD(0, 3), dD(1, 12);
    const int n = nD(rng);
    std::vector<Job> jobs;
    DueDateAssignment due;
    for (int j = 0; j < n; ++j) {
      jobs.push_back({j, pD(rng), rD(rng), StepCostFunction{}});
      due[j] = Rat(dD(rng));
    }
    CHECK(eddFeasibleSim(jobs, due) == eddFeasibleInterval(jobs, due));
  }
}

TEST_CASE("preemptive EDD realization meets feasible due dates") {
  std::vector<Job> jobs{{1, 2, 0, {}}, {2, 3, 1, {}}, {3, 1, 1, {}}};
  DueDateAssignment due{{1, Rat(6)}, {2, Rat(5)}, {3, Rat(2)}};
  REQUIRE(eddFeasibleSim(jobs, due));
  auto done = preemptiveEddCompletions(jobs, due);
  for (const auto& j : jobs) CHECK(done.at(j.id) <= due.at(j.id));
}

TEST_CASE("nonpreemptive EDD schedule for uniform releases") {
  GspInstance i = twoJobs();
  DueDateAssignment due{{1, Rat(5)}, {2, Rat(3)}};
  Schedule s = eddSchedule(i, due);
  CHECK(s.valid(i));
  CHECK(s.completion(i, 2) == 3);
  CHECK(s.completion(i, 1) == 5);
}

TEST_CASE("cover-side model helpers") {
  UfpCoverInstance c;
  c.edgeCount = 3;
  c.demands = {Rat(2), Rat(3), Rat(1)};
  c.tasks = {{0, 0, 3, 1, Rat(1)}, {1, 0, 2, 2, Rat(2)}, {2, 1, 3, 2, Rat(2)}};
  CHECK_NOTHROW(c.validate());
  CHECK(c.tasks[0].usesEdge(0));
  CHECK(c.tasks[0].usesEdge(2));
  CHECK_FALSE(c.tasks[1].usesEdge(2));

  auto prof = inducedProfile(c, {0, 1});
  CHECK(prof.heights == std::vector<Rat>{Rat(3), Rat(3), Rat(1)});
  CHECK(isFeasibleCover(c, {0, 1}));
  CHECK_FALSE(isFeasibleCover(c, {0, 2}));  // edge 0 gets only 1 < 2
  CHECK(coverCost(c, {0, 1}) == 3);

  DemandProfile a{{Rat(2), Rat(2)}}, b{{Rat(1), Rat(2)}};
  CHECK(a.dominates(b));
  CHECK_FALSE(b.dominates(a));
  b += a;
  CHECK(b.heights == std::vector<Rat>{Rat(3), Rat(4)});

  SUBCASE("validation rejects bad tasks") {
    c.tasks.push_back({3, 2, 2, 1, Rat(1)});  // empty span
    CHECK_THROWS(c.validate());
  }
}
