#include "ufpsched/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace ufpsched {

std::optional<UfpOracleResult> exactUfpCover(const UfpCoverInstance& inst, size_t taskCap) {
  inst.validate();
  const size_t n = inst.tasks.size();
  if (n > taskCap) throw CapExceeded("exactUfpCover: task count exceeds cap");

  std::vector<int> ids(n);
  for (size_t i = 0; i < n; ++i) ids[i] = inst.tasks[i].id;

  std::optional<UfpOracleResult> best;
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    std::vector<int> chosen;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) chosen.push_back(ids[i]);
    if (!isFeasibleCover(inst, chosen)) continue;
    Rat cost = coverCost(inst, chosen);
    std::sort(chosen.begin(), chosen.end());
    if (!best || cost < best->cost ||
        (cost == best->cost && chosen < best->taskIds))
      best = UfpOracleResult{std::move(chosen), std::move(cost)};
  }
  return best;
}

GspOracleResult exactGspUniformRelease(const GspInstance& inst, size_t jobCap) {
  inst.validate();
  if (inst.jobs.empty()) return {Schedule{}, Rat(0)};
  if (!inst.uniformRelease())
    throw std::invalid_argument("exactGspUniformRelease: releases must be uniform");
  if (inst.jobs.size() > jobCap)
    throw CapExceeded("exactGspUniformRelease: job count exceeds cap");

  std::vector<int> order(inst.jobs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = inst.jobs[i].id;
  std::sort(order.begin(), order.end());

  const Rat release(inst.jobs.front().r);
  std::optional<GspOracleResult> best;
  do {
    Schedule s;
    Rat now = release;
    Rat cost(0);
    for (int id : order) {
      const Job& j = inst.jobById(id);
      s.starts.emplace_back(id, now);
      now += j.p;
      cost += j.f.eval(now);
    }
    // next_permutation visits orders lexicographically, so the first optimum
    // found is the id-lexicographic tie-break winner.
    if (!best || cost < best->cost) best = GspOracleResult{std::move(s), std::move(cost)};
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

std::optional<DueDateOracleResult> exactDueDates(const GspInstance& inst,
                                                 const std::vector<Rat>& candidates,
                                                 unsigned long long assignmentCap) {
  inst.validate();
  const size_t n = inst.jobs.size();
  if (n == 0) return DueDateOracleResult{{}, Rat(0)};
  if (candidates.empty()) return std::nullopt;

  unsigned long long total = 1;
  for (size_t i = 0; i < n; ++i) {
    if (total > assignmentCap / candidates.size())
      throw CapExceeded("exactDueDates: |D|^n exceeds cap");
    total *= candidates.size();
  }

  std::vector<size_t> pick(n, 0);
  std::optional<DueDateOracleResult> best;
  for (;;) {
    DueDateAssignment due;
    Rat cost(0);
    bool evaluable = true;
    for (size_t i = 0; i < n; ++i) {
      const Job& j = inst.jobs[i];
      const Rat& d = candidates[pick[i]];
      if (!j.f.availableAt(d)) {
        evaluable = false;
        break;
      }
      due[j.id] = d;
      cost += j.f.eval(d);
    }
    if (evaluable && (!best || cost < best->cost) && eddFeasible(inst.jobs, due))
      best = DueDateOracleResult{std::move(due), std::move(cost)};

    size_t i = 0;
    while (i < n && ++pick[i] == candidates.size()) pick[i++] = 0;
    if (i == n) break;
  }
  return best;
}

}  // namespace ufpsched
