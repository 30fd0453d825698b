#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ufpsched/model.hpp"

namespace ufpsched {

/// Raised when a brute-force oracle is asked to exceed its configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UfpOracleResult {
  std::vector<int> taskIds;  // sorted ascending
  Rat cost;
};

/// Exhaustive minimum-cost feasible cover over all task subsets.
/// Ties broken by the lexicographically smallest sorted id set.
/// Returns nullopt when no subset covers the demands.
std::optional<UfpOracleResult> exactUfpCover(const UfpCoverInstance& inst,
                                             size_t taskCap = 20);

struct GspOracleResult {
  Schedule schedule;
  Rat cost;
};

/// Exhaustive minimum over all n! idle-free permutations at unit speed.
/// Requires uniform release dates. Ties broken by the lexicographically
/// smallest id order.
GspOracleResult exactGspUniformRelease(const GspInstance& inst, size_t jobCap = 9);

struct DueDateOracleResult {
  DueDateAssignment due;
  Rat cost;
};

/// Exhaustive minimum of sum f_j(d_j) over assignments d: jobs -> D that are
/// EDD-feasible. Returns nullopt when no assignment is feasible.
std::optional<DueDateOracleResult> exactDueDates(const GspInstance& inst,
                                                 const std::vector<Rat>& candidates,
                                                 unsigned long long assignmentCap = 4000000);

}  // namespace ufpsched
