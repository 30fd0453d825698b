#pragma once

#include <optional>
#include <vector>

#include "ufpsched/lp.hpp"
#include "ufpsched/model.hpp"

namespace ufpsched {

/// Largest power of 1+eps that is at most eps*p/(1+eps); the exponent may be
/// negative. Used as an artificial release date.
Rat artificialRelease(long p, const Rat& eps);

/// Smallest power of 1+eps that is at least C (C > 0).
Rat roundCompletion(const Rat& C, const Rat& eps);

/// Geometric time grid: interval I_t = [R_t, R_{t+1}) with R_t = (1+eps)^t,
/// refined by fine points R_{t,k} = (1 + k*eps^4/(4(1+eps))) * R_t for
/// k = 0..4(1+eps)/eps^3. Requires 4(1+eps)/eps^3 to be an integer so the
/// fine points partition each interval exactly.
struct IntervalGrid {
  Rat eps;
  long pointsPerInterval = 0;  // K = 4(1+eps)/eps^3; fine points k = 0..K

  explicit IntervalGrid(const Rat& eps);
  Rat R(long t) const;                       // interval left endpoint
  Rat intervalLength(long t) const;          // eps * R_t
  long intervalOf(const Rat& x) const;       // t with x in [R_t, R_{t+1}); x > 0
  Rat finePoint(long t, long k) const;
  Rat snapDown(const Rat& x) const;          // largest fine point <= x; x > 0
  Rat snapUp(const Rat& x) const;            // smallest fine point >= x; x > 0
};

/// One reserved execution window for a single large job. A slot may begin
/// before the interval it is accounted to; it is accounted to the interval
/// containing its end.
struct Slot {
  Rat beg;
  Rat end;
  long intervalIndex = 0;  // t(s): interval containing the slot end
};

/// Per-interval layout: disjoint large-job slots plus one (possibly empty)
/// small-job window, all endpoints on the fine grid.
struct IntervalPattern {
  long t = 0;
  std::vector<std::pair<long, long>> slots;  // fine-point index pairs [k0, k1)
  long windowBeg = 0;                        // fine-point indices; empty when equal
  long windowEnd = 0;
};

/// All patterns of an interval: every set of disjoint slots of at least
/// minSlotUnits fine-grid units each (at most maxSlots of them), combined
/// with every disjoint window (the empty window is canonical at 0).
std::vector<IntervalPattern> enumeratePatterns(const IntervalGrid& grid, long minSlotUnits,
                                               long maxSlots);

/// Closed-form pattern count computed by a layout recurrence, independent of
/// the explicit enumeration; used to cross-check enumeratePatterns.
unsigned long long countPatterns(long gridUnits, long minSlotUnits, long maxSlots);

/// A guessed combination of structures across all intervals: global slot
/// list plus per-interval windows.
struct PatternCombination {
  std::vector<Slot> slots;
  // (interval index, window begin, window end); rem(t) = end - beg.
  std::vector<std::tuple<long, Rat, Rat>> windows;
};

/// The slot-assignment LP, exactly:
///   (1) min sum_j [ sum_s f_j(R_{t(s)+1}) x_{s,j} + sum_t f_j(R_{t+1}) y_{t,j} ]
///   (2) sum_s x_{s,j} + sum_t y_{t,j} = 1            for all j
///   (3) sum_j x_{s,j} <= 1                            for all s
///   (4) sum_j p_j y_{t,j} <= rem(t)                   for all t
///   (5) x_{s,j} = 0 when r(j) > beg(s) or p_j > size(s)
///   (6) y_{t,j} = 0 when r(j) > R_t or p_j > eps|I_t|
///   (7) x, y >= 0
/// Variables are ordered slot-major then window-major; forced-zero variables
/// are pinned with upper bound 0.
struct SlpModel {
  LinearProgram lp;
  size_t numSlots = 0;
  size_t numWindows = 0;
  size_t numJobs = 0;
  size_t xIndex(size_t s, size_t j) const { return s * numJobs + j; }
  size_t yIndex(size_t w, size_t j) const { return (numSlots + w) * numJobs + j; }
};
SlpModel buildSlp(const PatternCombination& comb, const std::vector<Job>& jobs,
                  const IntervalGrid& grid);

/// Integral slot assignment. slotOf[j] = slot index or -1; windowOf[j] =
/// window index (into comb.windows) or -1; exactly one of the two is set.
struct SlotAssignment {
  std::vector<int> slotOf;
  std::vector<int> windowOf;
  Rat cost;  // objective (1) of the integral solution
};

/// Matching-based rounding: cost never increases; constraints (2),(3),(5),
/// (6) hold exactly and (4) relaxes to rem(t) + eps|I_t| per interval.
/// All of this is asserted on every call.
SlotAssignment roundSlp(const SlpModel& model, const PatternCombination& comb,
                        const std::vector<Job>& jobs, const IntervalGrid& grid,
                        const BasicSolution& fractional);

struct SpeedupConfig {
  size_t combinationCap = 5040;  // permutations tried before capping
};

struct SpeedupResult {
  Schedule schedule;           // real-time schedule at the reported speed
  Rat cost;                    // sum of f_j at rounded realized completions
  Rat speed;                   // (1+eps)^speedExponent
  long speedExponent = 0;
  bool capHit = false;
  size_t combinationsTried = 0;
};

/// Uniform-release scheduler: derives one pattern combination per candidate
/// job permutation (all n! up to the cap), solves and rounds the sLP for
/// each, realizes the best integral assignment at speed (1+eps)^c, and
/// returns the schedule of minimum realized cost. The realized cost never
/// exceeds the best permutation's unit-speed cost.
std::optional<SpeedupResult> solveSpeedup(const GspInstance& inst, const Rat& eps,
                                          const SpeedupConfig& cfg = {});

/// Documented speed exponent used by solveSpeedup for this eps.
long speedupExponent(const Rat& eps);

/// True iff, with processing times p_j/speed, executions do not overlap and
/// every start is at least the job's artificial release date.
bool validateSpeedSchedule(const GspInstance& inst, const Schedule& sched, const Rat& speed,
                           const Rat& eps);

}  // namespace ufpsched
