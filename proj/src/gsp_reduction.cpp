#include "ufpsched/gsp_reduction.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace ufpsched {

Rat defaultGamma() {
  // e rounded up at the 15th decimal place.
  static const Rat g = ratFromString("2718281828459046/1000000000000000");
  return g;
}

std::vector<long> thresholdTimes(const Job& job, const Rat& gamma, long alphaNum,
                                 long alphaDen, long P) {
  if (gamma <= 1) throw std::invalid_argument("thresholdTimes: gamma must exceed 1");
  if (alphaDen < 1 || alphaNum < 0 || alphaNum >= alphaDen)
    throw std::invalid_argument("thresholdTimes: alpha must lie in [0,1)");
  if (P < job.p) throw std::invalid_argument("thresholdTimes: P below processing time");

  std::vector<long> times{0};
  long cur = 0;
  // Threshold i compares f(t) > gamma^(i-1+alpha); raise both sides to the
  // alphaDen-th power to stay in exact rationals.
  for (long i = 1;; ++i) {
    const Rat bound = ratPow(gamma, (i - 1) * alphaDen + alphaNum);
    auto exceeds = [&](long t) {
      const Rat v = evalStep(job.f, Rat(t));
      return v > 0 && ratPow(v, alphaDen) > bound;
    };
    while (cur <= P && !exceeds(cur)) ++cur;
    if (cur > P) break;
    if (cur > times.back()) times.push_back(cur);
  }
  times.push_back(P + 1);
  return times;
}

ReductionResult reduceGspToUfp(const GspInstance& inst, const ReductionParams& params,
                               bool compress) {
  inst.validate();
  for (const auto& j : inst.jobs)
    if (j.r != 0) throw std::invalid_argument("reduceGspToUfp: releases must all be 0");

  const long P = inst.totalProcessing();
  ReductionResult out;
  out.map.totalProcessing = P;

  struct RawTask {
    int id;
    long s, t;  // vertex span in original coordinates
    long p;
    Rat c;
  };
  std::vector<RawTask> raw;
  int nextId = 0;
  for (const auto& j : inst.jobs) {
    auto times = thresholdTimes(j, params.gamma, params.alphaNum, params.alphaDen, P);
    auto& list = out.map.perJob[j.id];
    for (size_t i = 1; i < times.size(); ++i) {
      const long a = times[i - 1];
      const long b = times[i] - 1;  // interval [a, b]
      const long s = std::max(a, 1L) - 1;
      if (s >= b) continue;  // empty vertex span ([0,0] when the first threshold is at 1)
      Rat cost = evalStep(j.f, Rat(b));
      raw.push_back({nextId, s, b, j.p, cost});
      list.push_back({nextId, a, b, std::move(cost)});
      ++nextId;
    }
    if (list.empty()) throw std::logic_error("reduceGspToUfp: job produced no tasks");
  }

  std::vector<long> coords;
  if (compress) {
    std::set<long> vs{0, P};
    for (const auto& t : raw) {
      vs.insert(t.s);
      vs.insert(t.t);
    }
    coords.assign(vs.begin(), vs.end());
  } else {
    for (long v = 0; v <= P; ++v) coords.push_back(v);
  }
  out.map.vertexCoords = coords;

  auto vertexIndex = [&](long coord) {
    return (int)(std::lower_bound(coords.begin(), coords.end(), coord) - coords.begin());
  };

  out.cover.edgeCount = (int)coords.size() - 1;
  // Original edge i = (i-1, i) demands P - i + 1; a stretch's demand is the
  // demand of its first original edge.
  for (size_t v = 0; v + 1 < coords.size(); ++v)
    out.cover.demands.push_back(Rat(P - coords[v]));
  for (const auto& t : raw)
    out.cover.tasks.push_back({t.id, vertexIndex(t.s), vertexIndex(t.t), t.p, t.c});
  out.cover.validate();
  return out;
}

Schedule liftCoverToSchedule(const std::vector<int>& coverIds, const ReductionMap& map,
                             const GspInstance& inst) {
  std::set<int> chosen(coverIds.begin(), coverIds.end());
  DueDateAssignment due;
  for (const auto& j : inst.jobs) {
    auto it = map.perJob.find(j.id);
    if (it == map.perJob.end()) throw std::invalid_argument("job missing from reduction map");
    std::optional<long> rightmost;
    for (const auto& t : it->second)
      if (chosen.count(t.taskId) && (!rightmost || t.intervalHi > *rightmost))
        rightmost = t.intervalHi;
    if (!rightmost)
      throw std::invalid_argument("liftCoverToSchedule: cover contains no task of a job");
    due[j.id] = Rat(*rightmost);
  }
  return eddSchedule(inst, due);
}

std::vector<int> scheduleToCover(const Schedule& sched, const ReductionMap& map,
                                 const GspInstance& inst) {
  std::vector<int> out;
  for (const auto& j : inst.jobs) {
    const Rat C = sched.completion(inst, j.id);
    for (const auto& t : map.perJob.at(j.id))
      if (Rat(t.intervalLo) <= C) out.push_back(t.taskId);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rat derandomizationBound(long gridSize) {
  if (gridSize < 1) throw std::invalid_argument("gridSize must be >= 1");
  const Rat gamma = defaultGamma();
  const Rat target = ratPow(gamma, gridSize + 1);
  // Start just below e^(1+1/G) in floating point, then bump in 1e-9 steps
  // until the exact condition r^G >= gamma^(G+1) holds.
  const double approx = std::exp(1.0 + 1.0 / (double)gridSize);
  Rat r((long)(approx * 1e12), 1000000000000L);
  r.canonicalize();
  const Rat step = Rat(1000000001, 1000000000);
  while (ratPow(r, gridSize) < target) r *= step;
  return r;
}

std::optional<EApproxResult> solveEApprox(const GspInstance& inst, const UfpSolver& inner,
                                          long gridSize) {
  inst.validate();
  if (inst.jobs.empty()) return EApproxResult{Schedule{}, Rat(0), 0, gridSize,
                                              derandomizationBound(gridSize), {}};
  std::optional<EApproxResult> best;
  std::vector<AlphaRun> runs;
  for (long g = 0; g < gridSize; ++g) {
    ReductionParams params;
    params.alphaNum = g;
    params.alphaDen = gridSize;
    params.gridSize = gridSize;
    auto red = reduceGspToUfp(inst, params);
    auto cover = inner(red.cover);
    if (!cover) continue;
    Schedule s = liftCoverToSchedule(cover->taskIds, red.map, inst);
    Rat cost = scheduleCost(inst, s);
    runs.push_back({g, cover->cost, cost});
    if (!best || cost < best->cost) {
      best = EApproxResult{std::move(s), std::move(cost), g, gridSize,
                           derandomizationBound(gridSize), {}};
    }
  }
  if (best) best->runs = std::move(runs);
  return best;
}

}  // namespace ufpsched
