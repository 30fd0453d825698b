#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ufpsched/model.hpp"
#include "ufpsched/oracles.hpp"

namespace ufpsched {

/// Rational approximation of Euler's number, slightly above the true value
/// so exact comparisons against powers of it stay conservative.
Rat defaultGamma();

/// Geometric rounding parameters: thresholds at gamma^(i-1+alpha) with
/// alpha = alphaNum/alphaDen in [0, 1); gridSize drives derandomization.
struct ReductionParams {
  Rat gamma = defaultGamma();
  long alphaNum = 0;
  long alphaDen = 1;
  long gridSize = 8;
};

/// Per-job threshold times: t_0 = 0, then the first integer time in [0, P]
/// at which the job's cost exceeds gamma^(i-1+alpha) (duplicates collapsed),
/// terminated by P+1. Comparisons are exact via alphaDen-th powers.
std::vector<long> thresholdTimes(const Job& job, const Rat& gamma, long alphaNum,
                                 long alphaDen, long P);

struct GeneratedTask {
  int taskId = 0;
  long intervalLo = 0;  // [intervalLo, intervalHi] in original time coordinates
  long intervalHi = 0;
  Rat cost;
};

struct ReductionMap {
  long totalProcessing = 0;         // P
  std::vector<long> vertexCoords;   // path vertex index -> original coordinate
  std::map<int, std::vector<GeneratedTask>> perJob;  // job id -> ordered tasks
};

struct ReductionResult {
  UfpCoverInstance cover;
  ReductionMap map;
};

/// Uniform-release-0 scheduling instance -> path cover instance. Vertices
/// 0..P (P = total processing); the i-th edge demands P - i + 1 so that a
/// feasible cover corresponds exactly to a due-date assignment schedulable
/// by earliest-due-date-first. Each job contributes one task of size p_j and
/// cost f_j(t_i - 1) per consecutive threshold pair. With compress = true
/// the path is restricted to task endpoints, each stretch demanding the
/// maximum demand inside it.
ReductionResult reduceGspToUfp(const GspInstance& inst, const ReductionParams& params,
                               bool compress = true);

/// Due date of each job = right endpoint of its rightmost chosen task;
/// realize with nonpreemptive earliest-due-date-first. Throws when the cover
/// contains no task of some job.
Schedule liftCoverToSchedule(const std::vector<int>& coverIds, const ReductionMap& map,
                             const GspInstance& inst);

/// All tasks whose interval starts no later than the owning job's completion
/// time in the given unit-speed schedule.
std::vector<int> scheduleToCover(const Schedule& sched, const ReductionMap& map,
                                 const GspInstance& inst);

using UfpSolver = std::function<std::optional<UfpOracleResult>(const UfpCoverInstance&)>;

struct AlphaRun {
  long alphaNum = 0;
  Rat coverCost;
  Rat liftedCost;
};

struct EApproxResult {
  Schedule schedule;
  Rat cost;
  long bestAlphaNum = 0;
  long gridSize = 1;
  Rat guarantee;  // derandomizationBound(gridSize)
  std::vector<AlphaRun> runs;
};

/// Derandomized approximation: reduce at every alpha = g/gridSize, solve the
/// cover with the supplied solver, lift, and keep the cheapest schedule.
std::optional<EApproxResult> solveEApprox(const GspInstance& inst, const UfpSolver& inner,
                                          long gridSize = 8);

/// Smallest grid rational r (within 1e-9 steps) with r^G >= gamma^(G+1),
/// i.e. an exact upper bound on the e^(1+1/G) guarantee of the alpha grid.
Rat derandomizationBound(long gridSize);

}  // namespace ufpsched
