#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ufpsched/rational.hpp"
#include "ufpsched/step_function.hpp"

namespace ufpsched {

// ---------------------------------------------------------------------------
// Scheduling side
// ---------------------------------------------------------------------------

struct Job {
  int id = 0;
  long p = 1;   // processing time, >= 1
  long r = 0;   // release date, >= 0
  StepCostFunction f;
  std::optional<int> classIndex;  // index into GspInstance::globalFunctions
  std::optional<long> weight;
};

struct GspInstance {
  std::vector<Job> jobs;
  std::vector<StepCostFunction> globalFunctions;  // the g_1..g_k (may be empty)
  long weightBound = 1;

  /// Validates invariants; if class form is used, checks f == w * g_u
  /// at every breakpoint of both functions.
  void validate() const;

  bool uniformRelease() const;
  long totalProcessing() const;
  std::vector<long> distinctReleases() const;
  const Job& jobById(int id) const;
};

/// Nonpreemptive schedule: per-job start times at a common machine speed.
/// Completion of job j is S_j + p_j / speed.
struct Schedule {
  std::vector<std::pair<int, Rat>> starts;  // (job id, start time)
  Rat speed = Rat(1);

  Rat completion(const GspInstance& inst, int jobId) const;
  /// No two executions overlap and every S_j >= r_j at the given speed.
  bool valid(const GspInstance& inst) const;
};

using DueDateAssignment = std::map<int, Rat>;  // job id -> due date

Rat scheduleCost(const GspInstance& inst, const Schedule& sched);

/// Preemptive EDD simulation: true iff some preemptive schedule meets all
/// due dates.
bool eddFeasibleSim(const std::vector<Job>& jobs, const DueDateAssignment& due);

/// Interval condition: for every I = [r_j, d_{j'}], the jobs released in I
/// with a due date after I have total size >= ex(I) = max(sum p - |I|, 0),
/// where |I| is the interval length d_{j'} - r_j.
bool eddFeasibleInterval(const std::vector<Job>& jobs, const DueDateAssignment& due);

inline bool eddFeasible(const std::vector<Job>& jobs, const DueDateAssignment& due) {
  return eddFeasibleSim(jobs, due);
}

/// Nonpreemptive EDD realization at unit speed (uniform releases); ties by id.
Schedule eddSchedule(const GspInstance& inst, const DueDateAssignment& due);

/// Preemptive EDD realization; returns per-job completion times.
std::map<int, Rat> preemptiveEddCompletions(const std::vector<Job>& jobs,
                                            const DueDateAssignment& due);

// ---------------------------------------------------------------------------
// Covering side
// ---------------------------------------------------------------------------

struct UfpTask {
  int id = 0;
  int s = 0;  // start vertex
  int t = 1;  // end vertex, s < t; path = edges (s,s+1)..(t-1,t)
  long p = 1; // size
  Rat c;      // cost

  bool usesEdge(int e) const { return s <= e && e < t; }  // edge e = (e, e+1)
};

struct UfpCoverInstance {
  int edgeCount = 0;
  std::vector<Rat> demands;  // length edgeCount
  std::vector<UfpTask> tasks;

  void validate() const;
  const UfpTask& taskById(int id) const;
};

struct DemandProfile {
  std::vector<Rat> heights;

  bool dominates(const DemandProfile& other) const;
  DemandProfile& operator+=(const DemandProfile& other);
};

DemandProfile inducedProfile(std::span<const UfpTask> tasks, int edgeCount);
DemandProfile inducedProfile(const UfpCoverInstance& inst, const std::vector<int>& taskIds);

inline bool dominates(const DemandProfile& a, const DemandProfile& b) {
  return a.dominates(b);
}

bool isFeasibleCover(const UfpCoverInstance& inst, const std::vector<int>& chosenIds);

Rat coverCost(const UfpCoverInstance& inst, const std::vector<int>& chosenIds);

}  // namespace ufpsched
