#include "ufpsched/ufp_qptas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "ufpsched/lp.hpp"
#include "ufpsched/oracles.hpp"

namespace ufpsched {

PreprocessResult preprocess(const UfpCoverInstance& inst, const Rat& B, const Rat& eps) {
  if (B <= 0) throw std::invalid_argument("preprocess: B must be positive");
  PreprocessResult out;
  out.autoCost = Rat(0);
  const Rat threshold = inst.tasks.empty() ? Rat(0) : eps * B / Rat((long)inst.tasks.size());

  out.reduced.edgeCount = inst.edgeCount;
  out.reduced.demands = inst.demands;
  std::vector<UfpTask> kept;
  for (const auto& t : inst.tasks) {
    if (t.c > B) {
      out.rejected.push_back(t.id);
    } else if (t.c <= threshold) {
      out.autoSelected.push_back(t.id);
      out.autoCost += t.c;
      for (int e = t.s; e < t.t; ++e) {
        out.reduced.demands[e] -= t.p;
        if (out.reduced.demands[e] < 0) out.reduced.demands[e] = 0;
      }
    } else {
      kept.push_back(t);
    }
  }
  out.reduced.tasks = std::move(kept);
  return out;
}

std::vector<TaskGroup> groupTasks(const std::vector<UfpTask>& tasks, const Rat& eps) {
  const Rat base = Rat(1) + eps;
  std::map<std::pair<long, long>, TaskGroup> groups;
  for (const auto& t : tasks) {
    if (t.c <= 0)
      throw std::invalid_argument("groupTasks: costs must be positive (preprocess first)");
    long k = floorLog(base, t.c);
    long l = floorLog(base, Rat(t.p));
    auto& g = groups[{k, l}];
    g.k = k;
    g.l = l;
    g.tasks.push_back(t);
  }
  std::vector<TaskGroup> out;
  for (auto& [key, g] : groups) out.push_back(std::move(g));
  return out;
}

namespace {

/// Monotone nondecreasing sequences of the given length with values in
/// [lo, hi], visited in lexicographic order.
void forEachMonotone(int length, int lo, int hi, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if ((int)cur.size() == length) {
    emit(cur);
    return;
  }
  int start = cur.empty() ? lo : cur.back();
  for (int v = start; v <= hi; ++v) {
    cur.push_back(v);
    forEachMonotone(length, lo, hi, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ApproxProfile> enumerateApproxProfiles(const TaskGroup& group, long guessedCount,
                                                   const Rat& eps, int edgeLo, int edgeHi,
                                                   int middleEdge) {
  const int m = edgeHi - edgeLo;
  if (m < 1 || middleEdge < edgeLo || middleEdge >= edgeHi)
    throw std::invalid_argument("enumerateApproxProfiles: bad edge range");
  const Rat unit = eps * Rat(guessedCount) * ratPow(Rat(1) + eps, group.l + 1);
  const long jmax = guessedCount == 0 ? 0 : ceilDiv(Rat(1) / eps);

  std::vector<ApproxProfile> out;
  std::set<std::vector<Rat>> seen;
  auto add = [&](std::vector<Rat> heights) {
    if (seen.insert(heights).second) out.push_back({edgeLo, std::move(heights)});
  };

  add(std::vector<Rat>(m, Rat(0)));
  // A unimodal profile with level heights j*unit is determined by the
  // leftmost edge L_j and rightmost edge R_j at which level j is reached:
  // L_1 <= ... <= L_peak <= middle <= R_peak <= ... <= R_1.
  for (long peak = 1; peak <= jmax && unit > 0; ++peak) {
    std::vector<int> ls, rs;
    forEachMonotone((int)peak, edgeLo, middleEdge, ls, [&](const std::vector<int>& L) {
      forEachMonotone((int)peak, middleEdge, edgeHi - 1, rs, [&](const std::vector<int>& Rrev) {
        // Rrev is nondecreasing; R_j = Rrev[peak - j] makes R nonincreasing in j.
        std::vector<Rat> h(m, Rat(0));
        for (long j = 1; j <= peak; ++j) {
          int lj = L[j - 1];
          int rj = Rrev[peak - j];
          for (int e = lj; e <= rj; ++e)
            h[e - edgeLo] = Rat(j) * unit;
        }
        add(std::move(h));
      });
    });
  }
  return out;
}

std::optional<ProfileCoverResult> coverProfileLp(const TaskGroup& group,
                                                 const ApproxProfile& profile) {
  const int m = (int)profile.heights.size();
  std::set<Rat> levels;
  for (const auto& h : profile.heights)
    if (h > 0) levels.insert(h);

  LinearProgram lp;
  for (const auto& t : group.tasks) lp.addVariable(t.c, Rat(0), Rat(1));
  for (const Rat& h : levels) {
    int eL = -1, eR = -1;
    for (int e = 0; e < m; ++e) {
      if (profile.heights[e] >= h) {
        if (eL < 0) eL = e;
        eR = e;
      }
    }
    for (int e : {eL, eR}) {
      std::vector<Rat> row(group.tasks.size(), Rat(0));
      for (size_t i = 0; i < group.tasks.size(); ++i)
        if (group.tasks[i].usesEdge(profile.edgeLo + e)) row[i] = Rat(group.tasks[i].p);
      lp.addRow(std::move(row), Relation::GreaterEq, h);
      if (eR == eL) break;
    }
  }

  auto sol = solveToBasicOptimum(lp);
  if (sol.status != LpStatus::Optimal) return std::nullopt;
  ProfileCoverResult out;
  out.fractionalLpCost = sol.objective;
  out.fractionalCount = countFractional(sol);
  for (size_t i = 0; i < group.tasks.size(); ++i)
    if (sol.values[i] > 0) out.taskIds.push_back(group.tasks[i].id);
  std::sort(out.taskIds.begin(), out.taskIds.end());
  return out;
}

std::vector<int> augmentEdgeTasks(const TaskGroup& group, const std::vector<int>& chosen,
                                  long guessedCount, const Rat& eps) {
  const long quota = ceilDiv(eps * (Rat(1) + eps) * Rat(guessedCount));
  std::set<int> chosenSet(chosen.begin(), chosen.end());
  std::vector<const UfpTask*> rest;
  for (const auto& t : group.tasks)
    if (!chosenSet.count(t.id)) rest.push_back(&t);

  std::set<int> picked;
  auto take = [&](auto cmp) {
    std::vector<const UfpTask*> order = rest;
    std::sort(order.begin(), order.end(), cmp);
    for (long i = 0; i < quota && i < (long)order.size(); ++i) picked.insert(order[i]->id);
  };
  take([](const UfpTask* a, const UfpTask* b) {
    return a->s != b->s ? a->s < b->s : a->id < b->id;
  });
  take([](const UfpTask* a, const UfpTask* b) {
    return a->t != b->t ? a->t > b->t : a->id < b->id;
  });
  return {picked.begin(), picked.end()};
}

GroupCandidates buildGroupCandidates(const TaskGroup& group, const Rat& eps, int edgeLo,
                                     int edgeHi, int middleEdge, const QptasConfig& cfg) {
  GroupCandidates out;
  std::set<std::vector<int>> seen;
  auto groupCost = [&](const std::vector<int>& ids) {
    Rat c(0);
    for (int id : ids)
      for (const auto& t : group.tasks)
        if (t.id == id) c += t.c;
    return c;
  };
  auto add = [&](std::vector<int> ids, long g) {
    std::sort(ids.begin(), ids.end());
    if (!seen.insert(ids).second) return true;
    if (out.candidates.size() >= cfg.candidateCapPerGroup) {
      out.capHit = true;
      return false;
    }
    Rat c = groupCost(ids);
    out.candidates.push_back({std::move(ids), std::move(c), g});
    return true;
  };

  const long small = floorDiv(Rat(1) / (eps * eps));
  const size_t n = group.tasks.size();
  // Small guessed counts: enumerate every subset of size at most 1/eps^2.
  bool more = true;
  for (long size = 0; size <= small && size <= (long)n && more; ++size) {
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    for (;;) {
      std::vector<int> ids;
      for (int i : comb) ids.push_back(group.tasks[i].id);
      if (!add(std::move(ids), size)) {
        more = false;
        break;
      }
      // next combination
      int i = (int)size - 1;
      while (i >= 0 && comb[i] == (int)n - (int)size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < (int)size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }

  // Large guessed counts: LP cover of each approximate profile plus the
  // edge-task augmentation.
  for (long g = small + 1; g <= (long)n && more; ++g) {
    for (const auto& profile : enumerateApproxProfiles(group, g, eps, edgeLo, edgeHi, middleEdge)) {
      auto cover = coverProfileLp(group, profile);
      if (!cover) continue;
      std::vector<int> ids = cover->taskIds;
      for (int id : augmentEdgeTasks(group, cover->taskIds, g, eps)) ids.push_back(id);
      if (!add(std::move(ids), g)) {
        more = false;
        break;
      }
    }
  }
  return out;
}

namespace {

std::optional<RecursionResult> recurse(const std::vector<UfpTask>& available, int edgeLo,
                                       int edgeHi, const std::vector<Rat>& residual,
                                       const Rat& eps, const QptasConfig& cfg) {
  const int m = edgeHi - edgeLo;
  if ((int)residual.size() != m) throw std::invalid_argument("residual length mismatch");
  if (m == 0) return RecursionResult{Rat(0), {}, false};
  bool anyDemand = false;
  for (const auto& d : residual)
    if (d > 0) anyDemand = true;
  if (!anyDemand) return RecursionResult{Rat(0), {}, false};

  if (m == 1) {
    UfpCoverInstance one;
    one.edgeCount = 1;
    one.demands = {residual[0]};
    for (const auto& t : available)
      if (t.usesEdge(edgeLo)) one.tasks.push_back({t.id, 0, 1, t.p, t.c});
    auto best = exactUfpCover(one, cfg.baseCaseTaskCap);
    if (!best) return std::nullopt;
    return RecursionResult{best->cost, best->taskIds, false};
  }

  const int mid = edgeLo + m / 2;
  std::vector<UfpTask> crossing, leftTasks, rightTasks;
  for (const auto& t : available) {
    if (t.usesEdge(mid))
      crossing.push_back(t);
    else if (t.t <= mid)
      leftTasks.push_back(t);
    else
      rightTasks.push_back(t);
  }

  std::vector<GroupCandidates> perGroup;
  bool capHit = false;
  for (const auto& g : groupTasks(crossing, eps)) {
    perGroup.push_back(buildGroupCandidates(g, eps, edgeLo, edgeHi, mid, cfg));
    capHit = capHit || perGroup.back().capHit;
  }

  std::optional<RecursionResult> best;
  std::vector<const CandidateSet*> pick(perGroup.size(), nullptr);

  std::function<void(size_t, const Rat&)> dfs = [&](size_t gi, const Rat& costSoFar) {
    if (best && costSoFar >= best->cost) return;  // branch-and-bound
    if (gi < perGroup.size()) {
      for (const auto& cand : perGroup[gi].candidates) {
        pick[gi] = &cand;
        dfs(gi + 1, costSoFar + cand.cost);
      }
      return;
    }
    // Evaluate this combination of middle-edge candidates.
    std::vector<Rat> reduced = residual;
    std::vector<int> chosenIds;
    for (const auto* cand : pick) {
      for (int id : cand->taskIds) {
        chosenIds.push_back(id);
        for (const auto& t : crossing) {
          if (t.id != id) continue;
          for (int e = std::max(t.s, edgeLo); e < std::min(t.t, edgeHi); ++e)
            reduced[e - edgeLo] -= t.p;
          break;
        }
      }
    }
    if (reduced[mid - edgeLo] > 0) return;  // nothing else can cover the middle edge

    auto left = recurse(leftTasks, edgeLo, mid,
                        {reduced.begin(), reduced.begin() + (mid - edgeLo)}, eps, cfg);
    if (!left) return;
    if (best && costSoFar + left->cost >= best->cost) return;
    auto right = recurse(rightTasks, mid + 1, edgeHi,
                         {reduced.begin() + (mid + 1 - edgeLo), reduced.end()}, eps, cfg);
    if (!right) return;
    Rat total = costSoFar + left->cost + right->cost;
    if (best && total >= best->cost) return;
    RecursionResult r;
    r.cost = std::move(total);
    r.taskIds = std::move(chosenIds);
    r.taskIds.insert(r.taskIds.end(), left->taskIds.begin(), left->taskIds.end());
    r.taskIds.insert(r.taskIds.end(), right->taskIds.begin(), right->taskIds.end());
    r.capHit = left->capHit || right->capHit;
    std::sort(r.taskIds.begin(), r.taskIds.end());
    best = std::move(r);
  };
  dfs(0, Rat(0));
  if (best) best->capHit = best->capHit || capHit;
  return best;
}

}  // namespace

std::optional<RecursionResult> ufpCoverRecursive(const std::vector<UfpTask>& available,
                                                 int edgeLo, int edgeHi,
                                                 const std::vector<Rat>& residual,
                                                 const Rat& eps, const QptasConfig& cfg) {
  return recurse(available, edgeLo, edgeHi, residual, eps, cfg);
}

Rat qptasSlack(const Rat& eps) {
  const Rat one(1);
  return (one + eps) * (one + eps) *
         (one + Rat(2) * eps * (one + eps) * (Rat(2) + eps));
}

namespace {

std::optional<QptasResult> tryBudget(const UfpCoverInstance& inst, const Rat& B, const Rat& eps,
                                     const QptasConfig& cfg, const Rat& slack,
                                     bool enforceBound) {
  auto pre = preprocess(inst, B, eps);
  auto rec = ufpCoverRecursive(pre.reduced.tasks, 0, pre.reduced.edgeCount,
                               pre.reduced.demands, eps, cfg);
  if (!rec) return std::nullopt;
  Rat total = pre.autoCost + rec->cost;
  if (enforceBound && total > slack * B) return std::nullopt;
  QptasResult out;
  out.taskIds = pre.autoSelected;
  out.taskIds.insert(out.taskIds.end(), rec->taskIds.begin(), rec->taskIds.end());
  std::sort(out.taskIds.begin(), out.taskIds.end());
  out.cost = std::move(total);
  out.budget = B;
  out.slack = slack;
  out.capHit = rec->capHit;
  if (!isFeasibleCover(inst, out.taskIds)) return std::nullopt;
  return out;
}

}  // namespace

std::optional<QptasResult> solveQptas(const UfpCoverInstance& inst, const Rat& eps,
                                      const QptasConfig& cfg) {
  inst.validate();
  const Rat slack = qptasSlack(eps);

  bool anyDemand = false;
  for (const auto& d : inst.demands)
    if (d > 0) anyDemand = true;
  if (!anyDemand) return QptasResult{{}, Rat(0), Rat(0), slack, false};

  // Quick necessary condition: all tasks together must cover the demands.
  std::vector<int> all;
  for (const auto& t : inst.tasks) all.push_back(t.id);
  if (!isFeasibleCover(inst, all)) return std::nullopt;

  Rat total(0), minPositive(0);
  for (const auto& t : inst.tasks) {
    total += t.c;
    if (t.c > 0 && (minPositive == 0 || t.c < minPositive)) minPositive = t.c;
  }

  const Rat base = Rat(1) + eps;
  if (minPositive > 0) {
    long i0 = floorLog(base, minPositive);
    long i1 = ceilLog(base, total > 0 ? total : Rat(1));
    for (long i = i0; i <= i1; ++i) {
      if (auto r = tryBudget(inst, ratPow(base, i), eps, cfg, slack, true)) return r;
    }
  }
  // Guaranteed last attempt: the trivial upper bound as budget.
  return tryBudget(inst, total > 0 ? total : Rat(1), eps, cfg, slack, false);
}

}  // namespace ufpsched
