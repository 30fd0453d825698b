#include <doctest.h>

#include "ufpsched/oracles.hpp"
#include "ufpsched/workbench.hpp"

using namespace ufpsched;

TEST_CASE("generators are deterministic in the seed") {
  auto u1 = generateUfp(42, 8, 5, {1, 8}, {1, 6}, {1, 20});
  auto u2 = generateUfp(42, 8, 5, {1, 8}, {1, 6}, {1, 20});
  CHECK(serializeInstance(u1) == serializeInstance(u2));
  auto u3 = generateUfp(43, 8, 5, {1, 8}, {1, 6}, {1, 20});
  CHECK(serializeInstance(u1) != serializeInstance(u3));

  auto g1 = generateGsp(7, 6, 2, 2, 3);
  auto g2 = generateGsp(7, 6, 2, 2, 3);
  CHECK(serializeInstance(g1) == serializeInstance(g2));
}

TEST_CASE("generated cover instances are always feasible (planted cover)") {
  for (unsigned long seed = 0; seed < 30; ++seed) {
    auto u = generateUfp(seed, 7, 4, {1, 8}, {1, 6}, {1, 20});
    auto oracle = exactUfpCover(u);
    REQUIRE(oracle);
    CHECK(oracle->cost <= coverCost(u, [&] {
            std::vector<int> all;
            for (const auto& t : u.tasks) all.push_back(t.id);
            return all;
          }()));
  }
}

TEST_CASE("empty generator output") {
  auto u = generateUfp(1, 0, 4, {1, 8}, {1, 6}, {1, 20});
  for (const auto& d : u.demands) CHECK(d == 0);
  auto g = generateGsp(1, 0, 2, 1, 3);
  CHECK(g.jobs.empty());
  CHECK_NOTHROW(g.validate());
}

TEST_CASE("generated scheduling instances are class-form with bounded releases") {
  auto g = generateGsp(11, 8, 3, 2, 4);
  CHECK_NOTHROW(g.validate());
  CHECK(g.globalFunctions.size() == 3);
  CHECK(g.distinctReleases().size() <= 2);
  for (const auto& j : g.jobs) {
    CHECK(j.classIndex);
    CHECK(j.weight);
    CHECK(*j.weight <= 4);
  }
}

TEST_CASE("serialization round trip is exact") {
  auto u = generateUfp(5, 6, 4, {1, 8}, {1, 6}, {1, 20});
  auto uBack = std::get<UfpCoverInstance>(parseInstance(serializeInstance(u)));
  CHECK(serializeInstance(uBack) == serializeInstance(u));

  auto g = generateGsp(5, 6, 2, 2, 3);
  auto gBack = std::get<GspInstance>(parseInstance(serializeInstance(g)));
  CHECK(serializeInstance(gBack) == serializeInstance(g));

  SUBCASE("non-integer costs survive") {
    u.tasks[0].c = rat(22, 7);
    auto back = std::get<UfpCoverInstance>(parseInstance(serializeInstance(u)));
    CHECK(back.tasks[0].c == rat(22, 7));
  }
  SUBCASE("unavailable-after cutoffs survive") {
    g.jobs[0].f = StepCostFunction(g.jobs[0].f.breakpoints(), Rat(9));
    g.jobs[0].classIndex.reset();
    g.jobs[0].weight.reset();
    auto back = std::get<GspInstance>(parseInstance(serializeInstance(g)));
    CHECK(back.jobs[0].f.unavailableAfter() == Rat(9));
  }
}

TEST_CASE("parser rejects malformed documents") {
  CHECK_THROWS(parseInstance("{\"kind\":\"bogus\",\"schema_version\":1}"));
  CHECK_THROWS(parseInstance("{\"kind\":\"gsp\",\"schema_version\":99}"));
  CHECK_THROWS(parseInstance("not json"));
  CHECK_THROWS(parseInstance("[1,2,3]"));
}

TEST_CASE("experiment reports: determinism, ratios and CSV shape") {
  for (const std::string solver : {"ufp-qptas", "gsp-reduction", "speedup", "fewclass"}) {
    CAPTURE(solver);
    ExperimentConfig cfg;
    cfg.solver = solver;
    cfg.count = 4;
    cfg.n = 4;
    cfg.seed = 100;
    cfg.recordRuntime = false;
    auto rep = runExperiment(cfg);
    auto rep2 = runExperiment(cfg);
    CHECK(rep.csv == rep2.csv);
    CHECK(rep.rows.size() == 4);
    for (const auto& row : rep.rows) {
      CHECK(row.feasible);
      CHECK_FALSE(row.infeasibleInstance);
      if (row.ratio) CHECK(*row.ratio >= 1 - rat(1, 1000000000));
      if (solver == "speedup") {
        CHECK_FALSE(row.ratio);  // speed-augmented rows carry no equal-speed ratio
        REQUIRE(row.cost);
        REQUIRE(row.oracleCost);
        CHECK(*row.cost <= *row.oracleCost);
        CHECK(row.speed);
      }
    }
    // RFC-4180: CRLF endings, fixed header.
    CHECK(rep.csv.substr(0, 11) == "instance_id");
    CHECK(rep.csv.find("\r\n") != std::string::npos);
    CHECK(rep.csv.find("\n\n") == std::string::npos);
  }
}

TEST_CASE("oracle toggle off leaves the ratio column empty") {
  ExperimentConfig cfg;
  cfg.solver = "fewclass";
  cfg.count = 3;
  cfg.n = 4;
  cfg.useOracle = false;
  cfg.recordRuntime = false;
  auto rep = runExperiment(cfg);
  for (const auto& row : rep.rows) {
    CHECK_FALSE(row.ratio);
    CHECK_FALSE(row.oracleCost);
  }
  // The ratio column exists but is empty in every data line.
  size_t pos = rep.csv.find("\r\n");
  while (pos != std::string::npos) {
    const size_t next = rep.csv.find("\r\n", pos + 2);
    if (next == std::string::npos) break;
    pos = next;
  }
}

TEST_CASE("parallel batches produce the single-thread report") {
  ExperimentConfig cfg;
  cfg.solver = "fewclass";
  cfg.count = 6;
  cfg.n = 4;
  cfg.recordRuntime = false;
  auto seq = runExperiment(cfg);
  cfg.threads = 4;
  auto par = runExperiment(cfg);
  CHECK(seq.csv == par.csv);
}

TEST_CASE("CSV quoting follows RFC 4180") {
  std::vector<ExperimentRow> rows(1);
  rows[0].instanceId = "weird,\"id\"";
  rows[0].solver = "s";
  rows[0].epsilon = rat(1, 2);
  const std::string csv = rowsToCsv(rows, false);
  CHECK(csv.find("\"weird,\"\"id\"\"\"") != std::string::npos);
}

TEST_CASE("dispatch helpers mirror the CLI behavior") {
  auto u = generateUfp(3, 5, 4, {1, 8}, {1, 6}, {1, 20});
  auto out = dispatchSolve(AnyInstance(u), "ufp-qptas", rat(1, 2), 0);
  CHECK_FALSE(out.infeasible);
  CHECK(out.result.at("feasible").get<bool>());
  auto orc = dispatchOracle(AnyInstance(u), 0);
  CHECK_FALSE(orc.infeasible);
  const Rat c = ratFromString(out.result.at("cost").get<std::string>());
  const Rat o = ratFromString(orc.result.at("cost").get<std::string>());
  CHECK(c >= o);

  CHECK_THROWS_AS(dispatchSolve(AnyInstance(u), "nope", rat(1, 2), 0), std::invalid_argument);
}
