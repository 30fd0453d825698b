#include "ufpsched/step_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace ufpsched {

StepCostFunction::StepCostFunction(std::vector<std::pair<Rat, Rat>> breakpoints,
                                   std::optional<Rat> unavailableAfter)
    : bps_(std::move(breakpoints)), cap_(std::move(unavailableAfter)) {
  for (size_t i = 0; i < bps_.size(); ++i) {
    if (bps_[i].first < 0 || bps_[i].second < 0)
      throw std::invalid_argument("step function: negative time or value");
    if (i > 0) {
      if (bps_[i].first <= bps_[i - 1].first)
        throw std::invalid_argument("step function: times must strictly increase");
      if (bps_[i].second < bps_[i - 1].second)
        throw std::invalid_argument("step function: values must be nondecreasing");
    }
  }
}

Rat StepCostFunction::eval(const Rat& t) const {
  if (t < 0) throw std::invalid_argument("step function: t < 0");
  if (!availableAt(t)) throw std::domain_error("step function: evaluated past cutoff");
  Rat v(0);
  for (const auto& [bt, bv] : bps_) {
    if (bt > t) break;
    v = bv;
  }
  return v;
}

bool StepCostFunction::availableAt(const Rat& t) const {
  return !cap_ || t <= *cap_;
}

std::vector<Rat> StepCostFunction::increasePoints() const {
  std::vector<Rat> out;
  Rat prev(0);
  for (const auto& [bt, bv] : bps_) {
    if (bv > prev) out.push_back(bt);
    prev = bv;
  }
  return out;
}

Rat StepCostFunction::maxValue() const {
  return bps_.empty() ? Rat(0) : bps_.back().second;
}

StepCostFunction StepCostFunction::constant(const Rat& v) {
  if (v == 0) return StepCostFunction{};
  return StepCostFunction({{Rat(0), v}});
}

StepCostFunction StepCostFunction::scaled(const Rat& w) const {
  std::vector<std::pair<Rat, Rat>> bps;
  bps.reserve(bps_.size());
  for (const auto& [t, v] : bps_) bps.emplace_back(t, v * w);
  return StepCostFunction(std::move(bps), cap_);
}

}  // namespace ufpsched
