#pragma once

#include <optional>
#include <vector>

#include "ufpsched/model.hpp"

namespace ufpsched {

struct QptasConfig {
  size_t candidateCapPerGroup = 64;  // candidates kept per (k,l) group
  size_t baseCaseTaskCap = 20;       // brute-force cap on single-edge subproblems
};

/// Budget-phase preprocessing: drop tasks costing more than B, force-select
/// tasks costing at most eps*B/n, and reduce the demands by the profile of
/// the force-selected tasks (clamped at zero).
struct PreprocessResult {
  UfpCoverInstance reduced;
  std::vector<int> autoSelected;
  std::vector<int> rejected;
  Rat autoCost;
};
PreprocessResult preprocess(const UfpCoverInstance& inst, const Rat& B, const Rat& eps);

/// Tasks partitioned by the exponents of their geometric cost and size
/// classes: (1+eps)^k <= c < (1+eps)^{k+1}, (1+eps)^l <= p < (1+eps)^{l+1}.
/// All costs must be positive (preprocessing force-selects zero-cost tasks).
struct TaskGroup {
  long k = 0;
  long l = 0;
  std::vector<UfpTask> tasks;
};
std::vector<TaskGroup> groupTasks(const std::vector<UfpTask>& tasks, const Rat& eps);

/// Height profile over a contiguous edge range [edgeLo, edgeHi), unimodal
/// around the middle edge: nondecreasing up to it, nonincreasing after.
/// Heights come from { j * eps * g * (1+eps)^{l+1} : j = 0..ceil(1/eps) }.
struct ApproxProfile {
  int edgeLo = 0;
  std::vector<Rat> heights;  // heights[e - edgeLo]
};
std::vector<ApproxProfile> enumerateApproxProfiles(const TaskGroup& group, long guessedCount,
                                                   const Rat& eps, int edgeLo, int edgeHi,
                                                   int middleEdge);

/// Covering LP over the group with constraints only at the leftmost and
/// rightmost edge of each positive height level; fractional coordinates of
/// the vertex optimum are rounded up to 1. Returns the chosen ids plus the
/// number of coordinates that were fractional, or nullopt when the LP is
/// infeasible.
struct ProfileCoverResult {
  std::vector<int> taskIds;
  Rat fractionalLpCost;
  size_t fractionalCount = 0;
};
std::optional<ProfileCoverResult> coverProfileLp(const TaskGroup& group,
                                                 const ApproxProfile& profile);

/// The ceil(eps*(1+eps)*g) unchosen group tasks with the leftmost start
/// vertices plus as many with the rightmost end vertices (all remaining if
/// fewer exist); ties by id.
std::vector<int> augmentEdgeTasks(const TaskGroup& group, const std::vector<int>& chosen,
                                  long guessedCount, const Rat& eps);

/// One selectable alternative for a group at the current recursion node.
struct CandidateSet {
  std::vector<int> taskIds;  // sorted
  Rat cost;
  long guessedCount = 0;
};

/// Candidates for a group crossing the middle edge of [edgeLo, edgeHi):
/// for guessed counts up to 1/eps^2, plain subset enumeration of subsets of
/// size at most 1/eps^2; for larger counts, one candidate per feasible
/// approximate profile (LP cover plus edge-task augmentation). The list is
/// truncated at cfg.candidateCapPerGroup; capHit reports truncation.
struct GroupCandidates {
  std::vector<CandidateSet> candidates;
  bool capHit = false;
};
GroupCandidates buildGroupCandidates(const TaskGroup& group, const Rat& eps, int edgeLo,
                                     int edgeHi, int middleEdge, const QptasConfig& cfg);

/// Middle-edge recursion: choose one candidate per group crossing the middle
/// edge, subtract their profile from the residual demands, and recurse on the
/// left and right halves with the crossing tasks removed. Single-edge ranges
/// are solved exactly by brute force. Returns nullopt when no combination is
/// feasible.
struct RecursionResult {
  Rat cost;
  std::vector<int> taskIds;
  bool capHit = false;
};
std::optional<RecursionResult> ufpCoverRecursive(const std::vector<UfpTask>& available,
                                                 int edgeLo, int edgeHi,
                                                 const std::vector<Rat>& residual,
                                                 const Rat& eps, const QptasConfig& cfg);

/// Full solver: ascending scan over the budget grid {(1+eps)^i}, accepting
/// the first budget whose preprocessed recursion returns a feasible cover of
/// cost at most slack * B, where slack = (1+eps)^2 * (1 + 2eps(1+eps)(2+eps)).
/// Falls back to the total-cost budget before declaring infeasibility.
struct QptasResult {
  std::vector<int> taskIds;  // sorted; feasible for the original instance
  Rat cost;
  Rat budget;   // accepted B
  Rat slack;    // guarantee factor used in the acceptance test
  bool capHit = false;
};
std::optional<QptasResult> solveQptas(const UfpCoverInstance& inst, const Rat& eps,
                                      const QptasConfig& cfg = {});

/// The documented guarantee factor for a given eps.
Rat qptasSlack(const Rat& eps);

}  // namespace ufpsched
