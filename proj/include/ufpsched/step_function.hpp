#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ufpsched/rational.hpp"

namespace ufpsched {

/// Right-continuous nondecreasing step function with finitely many
/// breakpoints. The value before the first breakpoint is 0 (unless the
/// first breakpoint sits at time 0). A job that must not finish after
/// some time is modeled by `unavailableAfter`, not by a numeric infinity.
class StepCostFunction {
 public:
  StepCostFunction() = default;
  explicit StepCostFunction(std::vector<std::pair<Rat, Rat>> breakpoints,
                            std::optional<Rat> unavailableAfter = std::nullopt);

  /// Value at t >= 0 (right-continuous). Throws if t is past the
  /// unavailable-after cutoff.
  Rat eval(const Rat& t) const;

  bool availableAt(const Rat& t) const;

  const std::vector<std::pair<Rat, Rat>>& breakpoints() const { return bps_; }
  const std::optional<Rat>& unavailableAfter() const { return cap_; }

  /// Times at which the function strictly increases (first positive
  /// breakpoint included when preceded by an implicit 0).
  std::vector<Rat> increasePoints() const;

  Rat maxValue() const;

  bool operator==(const StepCostFunction& o) const {
    return bps_ == o.bps_ && cap_ == o.cap_;
  }

  static StepCostFunction constant(const Rat& v);
  /// f(t) = value of g scaled by w.
  StepCostFunction scaled(const Rat& w) const;

 private:
  std::vector<std::pair<Rat, Rat>> bps_;
  std::optional<Rat> cap_;
};

inline Rat evalStep(const StepCostFunction& f, const Rat& t) { return f.eval(t); }

}  // namespace ufpsched
