#include <stdexcept>

#include "ufpsched/fewclass.hpp"
#include "ufpsched/gsp_reduction.hpp"
#include "ufpsched/oracles.hpp"
#include "ufpsched/speedup.hpp"
#include "ufpsched/ufp_qptas.hpp"
#include "ufpsched/workbench.hpp"

namespace ufpsched {

namespace {

nlohmann::ordered_json ratJson(const Rat& r) { return r.get_str(); }

nlohmann::ordered_json startsJson(const Schedule& sched) {
  nlohmann::ordered_json starts = nlohmann::ordered_json::array();
  for (const auto& [id, s] : sched.starts)
    starts.push_back({{"id", id}, {"start", s.get_str()}});
  return starts;
}

}  // namespace

DispatchOutcome dispatchSolve(const AnyInstance& any, const std::string& solver, const Rat& eps,
                              size_t cap) {
  DispatchOutcome out;
  out.result["solver"] = solver;
  out.result["epsilon"] = eps.get_str();
  if (solver == "ufp-qptas") {
    const auto& inst = std::get<UfpCoverInstance>(any);
    QptasConfig qc;
    if (cap) qc.candidateCapPerGroup = cap;
    auto res = solveQptas(inst, eps, qc);
    if (!res) {
      out.infeasible = true;
      return out;
    }
    out.capHit = res->capHit;
    out.result["cost"] = ratJson(res->cost);
    out.result["budget"] = ratJson(res->budget);
    out.result["guarantee"] = ratJson(res->slack);
    out.result["task_ids"] = res->taskIds;
    out.result["feasible"] = isFeasibleCover(inst, res->taskIds);
  } else if (solver == "gsp-reduction") {
    const auto& inst = std::get<GspInstance>(any);
    UfpSolver inner = [](const UfpCoverInstance& c) { return exactUfpCover(c); };
    auto res = solveEApprox(inst, inner);
    if (!res) {
      out.infeasible = true;
      return out;
    }
    out.result["cost"] = ratJson(res->cost);
    out.result["guarantee"] = ratJson(res->guarantee);
    out.result["best_alpha_num"] = res->bestAlphaNum;
    out.result["grid_size"] = res->gridSize;
    out.result["starts"] = startsJson(res->schedule);
  } else if (solver == "speedup") {
    const auto& inst = std::get<GspInstance>(any);
    SpeedupConfig sc;
    if (cap) sc.combinationCap = cap;
    auto res = solveSpeedup(inst, eps, sc);
    if (!res) {
      out.infeasible = true;
      return out;
    }
    out.capHit = res->capHit;
    out.result["cost"] = ratJson(res->cost);
    out.result["speed"] = ratJson(res->speed);
    out.result["speed_exponent"] = res->speedExponent;
    out.result["valid"] = validateSpeedSchedule(inst, res->schedule, res->speed, eps);
    out.result["starts"] = startsJson(res->schedule);
  } else if (solver == "fewclass") {
    const auto& inst = std::get<GspInstance>(any);
    FewClassConfig fc;
    if (cap) fc.guessCap = cap;
    auto res = solveFewClasses(inst, eps, fc);
    if (!res) {
      out.infeasible = true;
      return out;
    }
    out.capHit = res->capHit;
    out.result["cost"] = ratJson(res->cost);
    out.result["rounded_cost"] = ratJson(res->roundedCost);
    out.result["budget"] = ratJson(res->budget);
    out.result["guarantee"] = ratJson(1 + res->epsEff);
    nlohmann::ordered_json due = nlohmann::ordered_json::array();
    for (const auto& [id, d] : res->due) due.push_back({{"id", id}, {"due", d.get_str()}});
    out.result["due_dates"] = std::move(due);
    out.result["feasible"] = eddFeasible(inst.jobs, res->due);
  } else {
    throw std::invalid_argument("unknown solver: " + solver);
  }
  return out;
}

DispatchOutcome dispatchOracle(const AnyInstance& any, size_t cap) {
  DispatchOutcome out;
  if (std::holds_alternative<UfpCoverInstance>(any)) {
    const auto& inst = std::get<UfpCoverInstance>(any);
    auto res = cap ? exactUfpCover(inst, cap) : exactUfpCover(inst);
    if (!res) {
      out.infeasible = true;
      return out;
    }
    out.result["oracle"] = "exact-ufp-cover";
    out.result["cost"] = ratJson(res->cost);
    out.result["task_ids"] = res->taskIds;
  } else {
    const auto& inst = std::get<GspInstance>(any);
    if (inst.uniformRelease()) {
      auto res = cap ? exactGspUniformRelease(inst, cap) : exactGspUniformRelease(inst);
      out.result["oracle"] = "exact-permutation";
      out.result["cost"] = ratJson(res.cost);
      out.result["starts"] = startsJson(res.schedule);
    } else {
      auto res = cap ? exactDueDates(inst, dueDateGrid(inst), cap)
                     : exactDueDates(inst, dueDateGrid(inst));
      if (!res) {
        out.infeasible = true;
        return out;
      }
      out.result["oracle"] = "exact-due-dates";
      out.result["cost"] = ratJson(res->cost);
    }
  }
  return out;
}

}  // namespace ufpsched
