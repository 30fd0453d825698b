#include "ufpsched/workbench.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ufpsched/fewclass.hpp"
#include "ufpsched/gsp_reduction.hpp"
#include "ufpsched/oracles.hpp"
#include "ufpsched/speedup.hpp"
#include "ufpsched/ufp_qptas.hpp"

namespace ufpsched {

namespace {

std::string csvField(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string ratField(const std::optional<Rat>& r) { return r ? r->get_str() : std::string(); }

std::string doubleField(double v) {
  std::ostringstream os;
  os.precision(9);
  os << std::fixed << v;
  return os.str();
}

ExperimentRow runOne(const ExperimentConfig& cfg, size_t index) {
  ExperimentRow row;
  row.solver = cfg.solver;
  row.epsilon = cfg.epsilon;
  const unsigned long seed = cfg.seed + index;
  std::ostringstream id;
  id << cfg.solver << "-" << seed;
  row.instanceId = id.str();

  const auto start = std::chrono::steady_clock::now();
  try {
    if (cfg.solver == "ufp-qptas") {
      const UfpCoverInstance inst =
          generateUfp(seed, cfg.n, cfg.m, {1, 8}, {1, 6}, {1, 20});
      QptasConfig qc;
      if (cfg.cap) qc.candidateCapPerGroup = cfg.cap;
      auto res = solveQptas(inst, cfg.epsilon, qc);
      if (!res) {
        row.infeasibleInstance = true;
      } else {
        row.cost = res->cost;
        row.capHit = res->capHit;
        row.feasible = isFeasibleCover(inst, res->taskIds);
        row.bound = qptasSlack(cfg.epsilon);
        if (cfg.useOracle) {
          auto oracle = exactUfpCover(inst);
          if (oracle) row.oracleCost = oracle->cost;
        }
      }
    } else if (cfg.solver == "gsp-reduction") {
      const GspInstance inst = generateGsp(seed, cfg.n, cfg.k, 1, cfg.weightBound);
      UfpSolver inner = [](const UfpCoverInstance& c) { return exactUfpCover(c); };
      auto res = solveEApprox(inst, inner, cfg.gridSize);
      if (!res) {
        row.infeasibleInstance = true;
      } else {
        row.cost = res->cost;
        row.feasible = res->schedule.valid(inst) || inst.jobs.empty();
        row.bound = res->guarantee;
        if (cfg.useOracle) row.oracleCost = exactGspUniformRelease(inst).cost;
      }
    } else if (cfg.solver == "speedup") {
      const GspInstance inst = generateGsp(seed, cfg.n, cfg.k, 1, cfg.weightBound);
      SpeedupConfig sc;
      if (cfg.cap) sc.combinationCap = cfg.cap;
      auto res = solveSpeedup(inst, cfg.epsilon, sc);
      if (!res) {
        row.infeasibleInstance = true;
      } else {
        row.cost = res->cost;
        row.capHit = res->capHit;
        row.speed = res->speed;
        row.feasible = validateSpeedSchedule(inst, res->schedule, res->speed, cfg.epsilon);
        row.bound = Rat(1);  // never above the unit-speed optimum
        if (cfg.useOracle) row.oracleCost = exactGspUniformRelease(inst).cost;
      }
    } else if (cfg.solver == "fewclass") {
      const GspInstance inst =
          generateGsp(seed, cfg.n, cfg.k, cfg.releases, cfg.weightBound);
      FewClassConfig fc;
      if (cfg.cap) fc.guessCap = cfg.cap;
      auto res = solveFewClasses(inst, cfg.epsilon, fc);
      if (!res) {
        row.infeasibleInstance = true;
      } else {
        row.cost = res->cost;
        row.capHit = res->capHit;
        row.feasible = eddFeasible(inst.jobs, res->due);
        row.bound = 1 + res->epsEff;
        if (cfg.useOracle) {
          auto oracle = exactDueDates(inst, dueDateGrid(inst));
          if (oracle) row.oracleCost = oracle->cost;
        }
      }
    } else {
      throw std::invalid_argument("unknown solver: " + cfg.solver);
    }
  } catch (const CapExceeded&) {
    row.capHit = true;
  }
  const auto end = std::chrono::steady_clock::now();
  row.runtimeSec = std::chrono::duration<double>(end - start).count();
  // A ratio is only meaningful at equal machine speed; speed-augmented rows
  // compare through the cost/oracle/speed columns instead.
  const bool sameSpeed = !row.speed || *row.speed == 1;
  if (row.cost && row.oracleCost && *row.oracleCost > 0 && sameSpeed)
    row.ratio = *row.cost / *row.oracleCost;
  return row;
}

}  // namespace

std::string rowsToCsv(const std::vector<ExperimentRow>& rows, bool recordRuntime) {
  std::ostringstream os;
  os << "instance_id,solver,epsilon,cost,oracle_cost,ratio,bound,runtime_sec,feasible,speed\r\n";
  for (const auto& r : rows) {
    os << csvField(r.instanceId) << ',' << csvField(r.solver) << ',' << r.epsilon.get_str()
       << ',' << ratField(r.cost) << ',' << ratField(r.oracleCost) << ','
       << (r.ratio ? doubleField(ratToDouble(*r.ratio)) : std::string()) << ','
       << ratField(r.bound) << ','
       << (recordRuntime ? doubleField(r.runtimeSec) : std::string()) << ','
       << (r.feasible ? "true" : "false") << ',' << ratField(r.speed) << "\r\n";
  }
  return os.str();
}

ExperimentReport runExperiment(const ExperimentConfig& cfg) {
  ExperimentReport report;
  report.rows.resize(cfg.count);

  const unsigned threads =
      std::max(1u, std::min<unsigned>(cfg.threads, (unsigned)std::max<size_t>(cfg.count, 1)));
  if (threads == 1) {
    for (size_t i = 0; i < cfg.count; ++i) report.rows[i] = runOne(cfg, i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < cfg.count; i = next.fetch_add(1))
          report.rows[i] = runOne(cfg, i);
      });
    for (auto& th : pool) th.join();
  }

  report.csv = rowsToCsv(report.rows, cfg.recordRuntime);

  size_t feasible = 0, infeasible = 0, capHits = 0, ratios = 0;
  double ratioSum = 0, ratioMax = 0;
  for (const auto& r : report.rows) {
    feasible += r.feasible;
    infeasible += r.infeasibleInstance;
    capHits += r.capHit;
    if (r.ratio) {
      ++ratios;
      const double d = ratToDouble(*r.ratio);
      ratioSum += d;
      ratioMax = std::max(ratioMax, d);
    }
  }
  nlohmann::ordered_json s;
  s["solver"] = cfg.solver;
  s["epsilon"] = cfg.epsilon.get_str();
  s["seed"] = cfg.seed;
  s["count"] = cfg.count;
  s["oracle"] = cfg.useOracle;
  s["feasible"] = feasible;
  s["infeasible_instances"] = infeasible;
  s["cap_hits"] = capHits;
  if (ratios) {
    s["mean_ratio"] = ratioSum / (double)ratios;
    s["max_ratio"] = ratioMax;
  } else {
    s["mean_ratio"] = nullptr;
    s["max_ratio"] = nullptr;
  }
  report.summary = std::move(s);
  return report;
}

}  // namespace ufpsched
