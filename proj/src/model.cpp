#include "ufpsched/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ufpsched {

void GspInstance::validate() const {
  std::set<int> ids;
  for (const auto& j : jobs) {
    if (j.p < 1) throw std::invalid_argument("job: p must be >= 1");
    if (j.r < 0) throw std::invalid_argument("job: r must be >= 0");
    if (!ids.insert(j.id).second) throw std::invalid_argument("duplicate job id");
    if (j.classIndex) {
      if (*j.classIndex < 0 || *j.classIndex >= static_cast<int>(globalFunctions.size()))
        throw std::invalid_argument("job: class index out of range");
      if (!j.weight || *j.weight < 1)
        throw std::invalid_argument("job: class form requires a positive weight");
      const StepCostFunction expected = globalFunctions[*j.classIndex].scaled(Rat(*j.weight));
      // f must equal w * g_u at every breakpoint of either function.
      auto check = [&](const Rat& t) {
        if (j.f.eval(t) != expected.eval(t))
          throw std::invalid_argument("job: f does not equal w * g_u");
      };
      check(Rat(0));
      for (const auto& [t, v] : j.f.breakpoints()) check(t);
      for (const auto& [t, v] : expected.breakpoints()) check(t);
    }
  }
  if (weightBound < 1) throw std::invalid_argument("weightBound must be positive");
  for (const auto& j : jobs)
    if (j.weight && *j.weight > weightBound)
      throw std::invalid_argument("job weight exceeds weightBound");
}

bool GspInstance::uniformRelease() const {
  for (const auto& j : jobs)
    if (j.r != jobs.front().r) return false;
  return true;
}

long GspInstance::totalProcessing() const {
  long s = 0;
  for (const auto& j : jobs) s += j.p;
  return s;
}

std::vector<long> GspInstance::distinctReleases() const {
  std::set<long> rs;
  for (const auto& j : jobs) rs.insert(j.r);
  return {rs.begin(), rs.end()};
}

const Job& GspInstance::jobById(int id) const {
  for (const auto& j : jobs)
    if (j.id == id) return j;
  throw std::out_of_range("no such job id");
}

Rat Schedule::completion(const GspInstance& inst, int jobId) const {
  for (const auto& [id, start] : starts)
    if (id == jobId) return start + Rat(inst.jobById(id).p) / speed;
  throw std::out_of_range("job not in schedule");
}

bool Schedule::valid(const GspInstance& inst) const {
  std::vector<std::pair<Rat, Rat>> spans;
  for (const auto& [id, start] : starts) {
    const Job& j = inst.jobById(id);
    if (start < Rat(j.r)) return false;
    spans.emplace_back(start, start + Rat(j.p) / speed);
  }
  std::sort(spans.begin(), spans.end());
  for (size_t i = 1; i < spans.size(); ++i)
    if (spans[i].first < spans[i - 1].second) return false;
  return true;
}

Rat scheduleCost(const GspInstance& inst, const Schedule& sched) {
  Rat total(0);
  for (const auto& [id, start] : sched.starts)
    total += inst.jobById(id).f.eval(start + Rat(inst.jobById(id).p) / sched.speed);
  return total;
}

std::map<int, Rat> preemptiveEddCompletions(const std::vector<Job>& jobs,
                                            const DueDateAssignment& due) {
  // Event-driven preemptive EDD: at any time run the released unfinished
  // job with the earliest due date (ties by id).
  struct State {
    const Job* job;
    Rat remaining;
    Rat dueDate;
  };
  std::vector<State> st;
  for (const auto& j : jobs) st.push_back({&j, Rat(j.p), due.at(j.id)});

  std::vector<Rat> releases;
  for (const auto& j : jobs) releases.emplace_back(j.r);
  std::sort(releases.begin(), releases.end());
  releases.erase(std::unique(releases.begin(), releases.end()), releases.end());

  std::map<int, Rat> completions;
  Rat now(0);
  size_t nextRelease = 0;
  size_t unfinished = st.size();
  while (unfinished > 0) {
    State* pick = nullptr;
    for (auto& s : st) {
      if (s.remaining == 0 || Rat(s.job->r) > now) continue;
      if (!pick || s.dueDate < pick->dueDate ||
          (s.dueDate == pick->dueDate && s.job->id < pick->job->id))
        pick = &s;
    }
    while (nextRelease < releases.size() && releases[nextRelease] <= now) ++nextRelease;
    if (!pick) {
      if (nextRelease >= releases.size()) break;  // unreachable for valid input
      now = releases[nextRelease];
      continue;
    }
    Rat finish = now + pick->remaining;
    if (nextRelease < releases.size() && releases[nextRelease] < finish) {
      pick->remaining -= releases[nextRelease] - now;
      now = releases[nextRelease];
    } else {
      pick->remaining = 0;
      completions[pick->job->id] = finish;
      now = finish;
      --unfinished;
    }
  }
  return completions;
}

bool eddFeasibleSim(const std::vector<Job>& jobs, const DueDateAssignment& due) {
  for (const auto& j : jobs)
    if (due.at(j.id) < Rat(j.r)) return false;
  auto completions = preemptiveEddCompletions(jobs, due);
  for (const auto& j : jobs)
    if (completions.at(j.id) > due.at(j.id)) return false;
  return true;
}

bool eddFeasibleInterval(const std::vector<Job>& jobs, const DueDateAssignment& due) {
  for (const auto& j : jobs)
    if (due.at(j.id) < Rat(j.r)) return false;
  for (const auto& jr : jobs) {
    for (const auto& jd : jobs) {
      const Rat lo(jr.r);
      const Rat hi = due.at(jd.id);
      if (hi < lo) continue;
      Rat volume(0), later(0);
      for (const auto& j : jobs) {
        if (Rat(j.r) < lo || Rat(j.r) > hi) continue;
        volume += j.p;
        if (due.at(j.id) > hi) later += j.p;
      }
      Rat excess = volume - (hi - lo);
      if (excess > 0 && later < excess) return false;
    }
  }
  return true;
}

Schedule eddSchedule(const GspInstance& inst, const DueDateAssignment& due) {
  std::vector<const Job*> order;
  for (const auto& j : inst.jobs) order.push_back(&j);
  std::sort(order.begin(), order.end(), [&](const Job* a, const Job* b) {
    if (due.at(a->id) != due.at(b->id)) return due.at(a->id) < due.at(b->id);
    return a->id < b->id;
  });
  Schedule s;
  Rat now(0);
  for (const Job* j : order) {
    now = std::max(now, Rat(j->r));
    s.starts.emplace_back(j->id, now);
    now += j->p;
  }
  return s;
}

void UfpCoverInstance::validate() const {
  if (edgeCount < 1) throw std::invalid_argument("instance needs at least one edge");
  if (static_cast<int>(demands.size()) != edgeCount)
    throw std::invalid_argument("demand vector length mismatch");
  std::set<int> ids;
  for (const auto& t : tasks) {
    if (t.s < 0 || t.t > edgeCount || t.s >= t.t)
      throw std::invalid_argument("task out of path bounds");
    if (t.p < 1) throw std::invalid_argument("task size must be >= 1");
    if (t.c < 0) throw std::invalid_argument("task cost must be nonnegative");
    if (!ids.insert(t.id).second) throw std::invalid_argument("duplicate task id");
  }
}

const UfpTask& UfpCoverInstance::taskById(int id) const {
  for (const auto& t : tasks)
    if (t.id == id) return t;
  throw std::out_of_range("no such task id");
}

bool DemandProfile::dominates(const DemandProfile& other) const {
  if (heights.size() != other.heights.size())
    throw std::invalid_argument("profile length mismatch");
  for (size_t i = 0; i < heights.size(); ++i)
    if (heights[i] < other.heights[i]) return false;
  return true;
}

DemandProfile& DemandProfile::operator+=(const DemandProfile& other) {
  if (heights.size() != other.heights.size())
    throw std::invalid_argument("profile length mismatch");
  for (size_t i = 0; i < heights.size(); ++i) heights[i] += other.heights[i];
  return *this;
}

DemandProfile inducedProfile(std::span<const UfpTask> tasks, int edgeCount) {
  DemandProfile q;
  q.heights.assign(edgeCount, Rat(0));
  for (const auto& t : tasks) {
    if (t.s < 0 || t.t > edgeCount) throw std::invalid_argument("task out of path bounds");
    for (int e = t.s; e < t.t; ++e) q.heights[e] += t.p;
  }
  return q;
}

DemandProfile inducedProfile(const UfpCoverInstance& inst, const std::vector<int>& taskIds) {
  std::vector<UfpTask> chosen;
  for (int id : taskIds) chosen.push_back(inst.taskById(id));
  return inducedProfile(chosen, inst.edgeCount);
}

bool isFeasibleCover(const UfpCoverInstance& inst, const std::vector<int>& chosenIds) {
  DemandProfile q = inducedProfile(inst, chosenIds);
  DemandProfile need{inst.demands};
  return q.dominates(need);
}

Rat coverCost(const UfpCoverInstance& inst, const std::vector<int>& chosenIds) {
  Rat total(0);
  for (int id : chosenIds) total += inst.taskById(id).c;
  return total;
}

}  // namespace ufpsched
