#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ufpsched/lp.hpp"
#include "ufpsched/model.hpp"

namespace ufpsched {

/// Global class functions rounded against a budget B: every value is 0, the
/// floor value eps*B/(nW), a power of 1+eps in [eps*B/(nW), B), or the cap B.
struct RoundedClassSet {
  std::vector<StepCostFunction> rounded;
  Rat B;
  Rat floorValue;             // eps * B / (n * W)
  std::vector<Rat> dueDates;  // D: sorted times where some rounded function increases
};

/// Three-case value rounding: 0 stays 0; values in (0, eps*B/(nW)] become the
/// floor value; larger values round up to min(power of 1+eps, B).
RoundedClassSet roundClassFunctions(const std::vector<StepCostFunction>& g, const Rat& B,
                                    long W, size_t n, const Rat& eps);

/// Sorted union of the increase points of the rounded functions. Checks the
/// size bound |D| <= k * (log_{1+eps}(W*n/eps) + 2), the +2 covering the
/// floor and cap steps.
std::vector<Rat> dueDateCandidates(const RoundedClassSet& rounded, long W, size_t n,
                                   const Rat& eps);

/// Guessed most-expensive jobs with their due dates. cThres is the minimum
/// guessed cost; absent when no job is guessed (then nothing is forbidden).
struct ExpensiveGuess {
  std::vector<std::pair<int, Rat>> assigned;  // (job id, due date)
  std::optional<Rat> cThres;
};

/// The due-date LP, exactly:
///   (10) min sum_{j free} sum_{t in D} x_{j,t} f_j(t)
///   (11) sum_{j free, r_j in [r,t]} sum_{t' in D, t' > t} p_j x_{j,t'}
///          + sum_{j guessed, r_j in [r,t], d_j > t} p_j  >=  ex([r,t])
///        for all r in R, t in D, with ex(I) = max(sum_{X(I)} p - |I|, 0)
///   (12) sum_{t in D} x_{j,t} = 1 for every free job
///   (13) x_{j,t} = 0 when r_j + p_j > t or f_j(t) > cThres
///   (14) x >= 0
/// Jobs' f must already be the rounded costs. Forbidden variables are pinned
/// with upper bound 0; guessed contributions to (11) enter as constants.
struct DueDateLpModel {
  LinearProgram lp;
  std::vector<int> freeJobIds;   // row order of (12)
  std::vector<Rat> dueDates;     // column grid
  size_t xIndex(size_t jIdx, size_t tIdx) const { return jIdx * dueDates.size() + tIdx; }
};
DueDateLpModel buildDueDateLp(const GspInstance& roundedInst, const ExpensiveGuess& guess,
                              const std::vector<Rat>& D, const std::vector<long>& releases);

/// Max-support rounding: d_j = largest t with x_{j,t} > 0. The number of
/// fractionally assigned jobs never exceeds |D|*|R|; asserted.
struct RoundedDueDates {
  DueDateAssignment due;       // free jobs only
  size_t roundedUpCount = 0;   // jobs with a fractional assignment
};
RoundedDueDates roundDueDateLp(const DueDateLpModel& model, const BasicSolution& sol,
                               size_t releaseCount);

struct FewClassConfig {
  unsigned long long guessCap = 50000000;  // guesses per budget before capping
};

struct FewClassResult {
  DueDateAssignment due;            // all jobs
  std::map<int, Rat> completions;   // preemptive earliest-due-date realization
  Rat cost;                         // original functions at the completions
  Rat roundedCost;                  // rounded functions at the due dates
  Rat budget;                       // accepted B
  Rat epsEff;                       // documented guarantee slack
  size_t guessSize = 0;             // |J_E|
  bool capHit = false;
  // Extreme-point rounding bound, checked exactly on the winning run:
  // sum_{free} f^(d_j) <= c(x*) + eps * sum_{guessed} f^(d_j).
  Rat roundBoundLhs;
  Rat roundBoundRhs;
};

/// QPTAS for the class form f_j = w_j * g_{u(j)}: ascending scan over the
/// budget grid {(1+eps)^i}; per budget, round the class functions, guess the
/// min(n, ceil(|D||R|/eps)) most expensive jobs with due dates (exact
/// enumeration with incumbent pruning), assign the rest through the due-date
/// LP, and accept the first budget whose best candidate costs at most
/// (1+2eps)B under the rounded functions. Returns nullopt when no candidate
/// assignment within the due-date grid is feasible.
std::optional<FewClassResult> solveFewClasses(const GspInstance& inst, const Rat& eps,
                                              const FewClassConfig& cfg = {});

/// The documented guarantee slack: (1+2eps)(1+eps)^2 - 1.
Rat fewClassSlack(const Rat& eps);

/// Latest-time-before-increase due-date grid for integral scheduling data:
/// { tau - 1 : tau an increase point of some f, tau >= 1 } plus the horizon
/// max release + total processing. An optimal assignment always exists on it.
std::vector<Rat> dueDateGrid(const GspInstance& inst);

}  // namespace ufpsched
