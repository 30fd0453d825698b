#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

#include "ufpsched/rational.hpp"

namespace ufpsched {

enum class Relation { LessEq, GreaterEq, Equal };

struct LpRow {
  std::vector<Rat> coeffs;
  Relation rel = Relation::GreaterEq;
  Rat rhs;
};

/// Minimization LP with per-variable bounds [lo, hi]; hi may be absent
/// (unbounded above). All data exact rationals.
struct LinearProgram {
  std::vector<Rat> objective;
  std::vector<LpRow> rows;
  std::vector<Rat> lower;                  // finite lower bounds
  std::vector<std::optional<Rat>> upper;   // nullopt = +infinity

  int addVariable(const Rat& cost, const Rat& lo, std::optional<Rat> hi);
  void addRow(std::vector<Rat> coeffs, Relation rel, Rat rhs);
  size_t numVars() const { return objective.size(); }
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// A vertex of the feasible polyhedron. The number of coordinates strictly
/// between their bounds never exceeds the number of constraint rows; that
/// count is what the rounding arguments consume.
struct BasicSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rat> values;
  Rat objective;
  std::vector<size_t> fractionalIndices;  // strictly between bounds and non-integral
  size_t interiorCount = 0;               // strictly between bounds
};

/// Exact simplex (dense tableau, Bland's rule). When status == Optimal the
/// returned point satisfies every constraint exactly and is a vertex.
/// Infeasible / unbounded are statuses, not exceptions.
BasicSolution solveToBasicOptimum(const LinearProgram& lp);

size_t countFractional(const BasicSolution& sol, const Rat& tol = Rat(0));

/// Total solver invocations and the worst interior-count slack observed,
/// for suite-level reporting. Atomic so batch runs can solve in parallel.
struct LpStats {
  std::atomic<size_t> solves{0};
  std::atomic<bool> vertexViolation{false};
};
LpStats& lpStats();

}  // namespace ufpsched
