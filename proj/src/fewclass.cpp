#include "ufpsched/fewclass.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ufpsched {

RoundedClassSet roundClassFunctions(const std::vector<StepCostFunction>& g, const Rat& B,
                                    long W, size_t n, const Rat& eps) {
  if (B <= 0) throw std::invalid_argument("roundClassFunctions: B must be positive");
  if (W < 1 || n == 0) throw std::invalid_argument("roundClassFunctions: bad W or n");
  RoundedClassSet out;
  out.B = B;
  out.floorValue = eps * B / (Rat((long)n) * Rat(W));

  auto roundValue = [&](const Rat& v) -> Rat {
    if (v == 0) return Rat(0);
    if (v <= out.floorValue) return out.floorValue;
    return std::min(Rat(ratPow(1 + eps, ceilLog(1 + eps, v))), B);
  };
  for (const auto& fn : g) {
    std::vector<std::pair<Rat, Rat>> bps;
    for (const auto& [t, v] : fn.breakpoints()) bps.emplace_back(t, roundValue(v));
    out.rounded.emplace_back(std::move(bps), fn.unavailableAfter());
  }

  std::set<Rat> d;
  for (const auto& fn : out.rounded)
    for (const auto& t : fn.increasePoints()) d.insert(t);
  out.dueDates.assign(d.begin(), d.end());
  return out;
}

std::vector<Rat> dueDateCandidates(const RoundedClassSet& rounded, long W, size_t n,
                                   const Rat& eps) {
  std::set<Rat> d;
  for (const auto& fn : rounded.rounded)
    for (const auto& t : fn.increasePoints()) d.insert(t);
  const size_t k = rounded.rounded.size();
  const size_t bound =
      k * (size_t)(ceilLog(1 + eps, Rat(W) * Rat((long)n) / eps) + 2);
  if (d.size() > bound)
    throw std::logic_error("dueDateCandidates: size bound k*(log(Wn/eps)+2) violated");
  return {d.begin(), d.end()};
}

DueDateLpModel buildDueDateLp(const GspInstance& roundedInst, const ExpensiveGuess& guess,
                              const std::vector<Rat>& D, const std::vector<long>& releases) {
  DueDateLpModel m;
  m.dueDates = D;
  std::set<int> guessed;
  for (const auto& [id, d] : guess.assigned) guessed.insert(id);
  for (const auto& j : roundedInst.jobs)
    if (!guessed.count(j.id)) m.freeJobIds.push_back(j.id);

  // Variables; (13) pins with upper bound 0.
  for (int id : m.freeJobIds) {
    const Job& j = roundedInst.jobById(id);
    for (const Rat& t : D) {
      const Rat cost = evalStep(j.f, t);
      const bool forbidden =
          Rat(j.r + j.p) > t || (guess.cThres && cost > *guess.cThres);
      m.lp.addVariable(cost, Rat(0),
                       forbidden ? std::optional<Rat>(Rat(0)) : std::nullopt);
    }
  }

  const size_t nv = m.lp.numVars();
  // (11): release-date-extension covering, guessed jobs as constants.
  for (long r : releases)
    for (const Rat& t : D) {
      std::vector<Rat> row(nv, Rat(0));
      Rat inWindow(0);  // total size of X([r,t])
      Rat guessedLate(0);
      for (const auto& j : roundedInst.jobs) {
        if (Rat(j.r) < Rat(r) || Rat(j.r) > t) continue;
        inWindow += j.p;
        if (guessed.count(j.id)) {
          for (const auto& [id, d] : guess.assigned)
            if (id == j.id && d > t) guessedLate += j.p;
        }
      }
      for (size_t ji = 0; ji < m.freeJobIds.size(); ++ji) {
        const Job& j = roundedInst.jobById(m.freeJobIds[ji]);
        if (Rat(j.r) < Rat(r) || Rat(j.r) > t) continue;
        for (size_t ti = 0; ti < D.size(); ++ti)
          if (D[ti] > t) row[m.xIndex(ji, ti)] = Rat(j.p);
      }
      const Rat ex = std::max(Rat(inWindow - (t - Rat(r))), Rat(0));
      m.lp.addRow(std::move(row), Relation::GreaterEq, ex - guessedLate);
    }
  // (12): every free job gets a due date.
  for (size_t ji = 0; ji < m.freeJobIds.size(); ++ji) {
    std::vector<Rat> row(nv, Rat(0));
    for (size_t ti = 0; ti < D.size(); ++ti) row[m.xIndex(ji, ti)] = 1;
    m.lp.addRow(std::move(row), Relation::Equal, Rat(1));
  }
  return m;
}

RoundedDueDates roundDueDateLp(const DueDateLpModel& model, const BasicSolution& sol,
                               size_t releaseCount) {
  if (sol.status != LpStatus::Optimal)
    throw std::invalid_argument("roundDueDateLp: solution not optimal");
  RoundedDueDates out;
  for (size_t ji = 0; ji < model.freeJobIds.size(); ++ji) {
    std::optional<Rat> best;
    bool fractional = false;
    for (size_t ti = 0; ti < model.dueDates.size(); ++ti) {
      const Rat& v = sol.values[model.xIndex(ji, ti)];
      if (v == 0) continue;
      if (v != 1) fractional = true;
      if (!best || model.dueDates[ti] > *best) best = model.dueDates[ti];
    }
    if (!best) throw std::logic_error("roundDueDateLp: job with empty support");
    out.due[model.freeJobIds[ji]] = *best;
    if (fractional) ++out.roundedUpCount;
  }
  if (out.roundedUpCount > model.dueDates.size() * releaseCount)
    throw std::logic_error("roundDueDateLp: more than |D|*|R| fractional jobs");
  return out;
}

Rat fewClassSlack(const Rat& eps) { return (1 + 2 * eps) * (1 + eps) * (1 + eps) - 1; }

std::vector<Rat> dueDateGrid(const GspInstance& inst) {
  std::set<Rat> grid;
  long maxR = 0, sumP = 0;
  for (const auto& j : inst.jobs) {
    maxR = std::max(maxR, j.r);
    sumP += j.p;
    for (const auto& t : j.f.increasePoints())
      if (t >= 1) grid.insert(Rat(t - 1));
  }
  grid.insert(Rat(maxR + sumP));
  return {grid.begin(), grid.end()};
}

namespace {

struct Candidate {
  DueDateAssignment due;
  Rat roundedCost;
  size_t guessSize = 0;
  Rat roundBoundLhs;
  Rat roundBoundRhs;
};

// Latest-before-increase grid of the rounded functions plus the horizon.
std::vector<Rat> internalGrid(const std::vector<Rat>& D, long horizon) {
  std::set<Rat> g;
  for (const Rat& t : D)
    if (t >= 1) g.insert(t - 1);
  g.insert(Rat(horizon));
  return {g.begin(), g.end()};
}

// Per-job Pareto frontier of candidate due dates: keep only the largest t
// for each attained rounded cost (later dates with equal cost dominate for
// feasibility). Sorted ascending in t.
std::vector<Rat> frontier(const Job& j, const std::vector<Rat>& grid) {
  std::vector<Rat> out;
  std::optional<Rat> lastCost;
  for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
    if (Rat(j.r + j.p) > *it) break;
    const Rat c = evalStep(j.f, *it);
    if (!lastCost || c < *lastCost) {
      out.push_back(*it);
      lastCost = c;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<FewClassResult> solveFewClasses(const GspInstance& inst, const Rat& eps,
                                              const FewClassConfig& cfg) {
  inst.validate();
  if (inst.globalFunctions.empty())
    throw std::invalid_argument("solveFewClasses: class form required");
  for (const auto& j : inst.jobs)
    if (!j.classIndex || !j.weight)
      throw std::invalid_argument("solveFewClasses: every job needs a class and weight");

  const size_t n = inst.jobs.size();
  FewClassResult res;
  res.epsEff = fewClassSlack(eps);
  if (n == 0) {
    res.cost = res.roundedCost = res.budget = 0;
    res.roundBoundLhs = res.roundBoundRhs = 0;
    return res;
  }

  long W = inst.weightBound, maxR = 0, sumP = 0;
  for (const auto& j : inst.jobs) {
    W = std::max(W, *j.weight);
    maxR = std::max(maxR, j.r);
    sumP += j.p;
  }
  const long horizon = maxR + sumP;

  Rat bMax(0);
  for (const auto& j : inst.jobs) bMax += evalStep(j.f, Rat(horizon));
  if (bMax == 0) {  // everything free of charge
    for (const auto& j : inst.jobs) res.due[j.id] = Rat(horizon);
    res.completions = preemptiveEddCompletions(inst.jobs, res.due);
    res.cost = res.roundedCost = res.budget = 0;
    res.roundBoundLhs = res.roundBoundRhs = 0;
    return res;
  }
  Rat bLow(0);
  for (const auto& j : inst.jobs) bLow = std::max(Rat(bLow), Rat(evalStep(j.f, Rat(j.r + j.p))));
  if (bLow == 0) bLow = bMax / Rat((long)n);  // grid floor when cheapest completions are free

  const std::vector<long> releases = inst.distinctReleases();
  unsigned long long guessesUsed = 0;
  bool capHit = false;

  for (long i = floorLog(1 + eps, bLow); i <= ceilLog(1 + eps, bMax); ++i) {
    const Rat B = ratPow(1 + eps, i);
    RoundedClassSet rounded = roundClassFunctions(inst.globalFunctions, B, W, n, eps);
    const std::vector<Rat> D = dueDateCandidates(rounded, W, n, eps);
    const std::vector<Rat> grid = internalGrid(D, horizon);

    GspInstance rinst = inst;
    rinst.globalFunctions = rounded.rounded;
    rinst.weightBound = W;
    for (auto& j : rinst.jobs) j.f = rounded.rounded[(size_t)*j.classIndex].scaled(Rat(*j.weight));

    const size_t gSize =
        std::min(n, (size_t)ceilDiv(Rat((long)(grid.size() * releases.size())) / eps));

    // Job order for guessing: by maximum attainable rounded cost, descending.
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      const Rat ca = evalStep(rinst.jobs[a].f, Rat(horizon));
      const Rat cb = evalStep(rinst.jobs[b].f, Rat(horizon));
      if (ca != cb) return ca > cb;
      return rinst.jobs[a].id < rinst.jobs[b].id;
    });
    std::vector<std::vector<Rat>> fronts(n);
    for (size_t j = 0; j < n; ++j) fronts[j] = frontier(rinst.jobs[j], grid);

    std::optional<Candidate> best;

    auto tryFullAssignment = [&](const DueDateAssignment& due, const Rat& roundedCost) {
      if (!eddFeasible(inst.jobs, due)) return;
      if (!best || roundedCost < best->roundedCost) {
        Candidate c;
        c.due = due;
        c.roundedCost = roundedCost;
        c.guessSize = n;
        c.roundBoundLhs = 0;
        c.roundBoundRhs = eps * roundedCost;
        best = c;
      }
    };

    if (gSize == n) {
      // All jobs guessed: exact due-date enumeration with incumbent pruning.
      DueDateAssignment due;
      Rat acc(0);
      auto dfs = [&](auto&& self, size_t pos) -> void {
        if (capHit) return;
        if (pos == n) {
          ++guessesUsed;
          if (guessesUsed > cfg.guessCap) {
            capHit = true;
            return;
          }
          tryFullAssignment(due, acc);
          return;
        }
        const Job& rj = rinst.jobs[order[pos]];
        const Job& oj = inst.jobs[order[pos]];
        for (const Rat& d : fronts[order[pos]]) {
          if (evalStep(oj.f, d) > B) continue;  // inconsistent with budget B
          const Rat c = evalStep(rj.f, d);
          if (best && acc + c >= best->roundedCost) continue;
          due[rj.id] = d;
          acc += c;
          self(self, pos + 1);
          acc -= c;
          due.erase(rj.id);
        }
      };
      dfs(dfs, 0);
    } else {
      // Guess a subset of gSize jobs with due dates; LP for the rest.
      std::vector<size_t> subset;
      auto runGuess = [&](const std::vector<std::pair<int, Rat>>& assigned, const Rat& gCost) {
        ++guessesUsed;
        if (guessesUsed > cfg.guessCap) {
          capHit = true;
          return;
        }
        ExpensiveGuess guess;
        guess.assigned = assigned;
        for (const auto& [id, d] : assigned) {
          const Rat c = evalStep(rinst.jobById(id).f, d);
          if (!guess.cThres || c < *guess.cThres) guess.cThres = c;
        }
        DueDateLpModel model = buildDueDateLp(rinst, guess, grid, releases);
        BasicSolution sol = solveToBasicOptimum(model.lp);
        if (sol.status != LpStatus::Optimal) return;
        RoundedDueDates rd = roundDueDateLp(model, sol, releases.size());

        DueDateAssignment due = rd.due;
        Rat freeCost(0);
        for (const auto& [id, d] : rd.due) {
          if (evalStep(inst.jobById(id).f, d) > B) return;  // reject: original above B
          freeCost += evalStep(rinst.jobById(id).f, d);
        }
        for (const auto& [id, d] : assigned) due[id] = d;
        if (!eddFeasible(inst.jobs, due)) return;

        const Rat lhs = freeCost;
        const Rat rhs = sol.objective + eps * gCost;
        if (lhs > rhs)
          throw std::logic_error("solveFewClasses: extreme-point cost bound violated");
        const Rat total = gCost + freeCost;
        if (!best || total < best->roundedCost) {
          Candidate c;
          c.due = due;
          c.roundedCost = total;
          c.guessSize = assigned.size();
          c.roundBoundLhs = lhs;
          c.roundBoundRhs = rhs;
          best = c;
        }
      };
      std::vector<std::pair<int, Rat>> assigned;
      Rat acc(0);
      auto tuples = [&](auto&& self, size_t idx) -> void {
        if (capHit) return;
        if (idx == subset.size()) {
          runGuess(assigned, acc);
          return;
        }
        const size_t jpos = subset[idx];
        const Job& rj = rinst.jobs[jpos];
        const Job& oj = inst.jobs[jpos];
        for (const Rat& d : fronts[jpos]) {
          if (evalStep(oj.f, d) > B) continue;
          const Rat c = evalStep(rj.f, d);
          if (best && acc + c >= best->roundedCost) continue;
          assigned.emplace_back(rj.id, d);
          acc += c;
          self(self, idx + 1);
          acc -= c;
          assigned.pop_back();
        }
      };
      auto subsets = [&](auto&& self, size_t from) -> void {
        if (capHit) return;
        if (subset.size() == gSize) {
          tuples(tuples, 0);
          return;
        }
        for (size_t p = from; p + (gSize - subset.size()) <= n; ++p) {
          subset.push_back(order[p]);
          self(self, p + 1);
          subset.pop_back();
        }
      };
      subsets(subsets, 0);
    }

    if (best && best->roundedCost <= (1 + eps) * (1 + 2 * eps) * B) {
      res.due = best->due;
      res.completions = preemptiveEddCompletions(inst.jobs, res.due);
      res.cost = 0;
      for (const auto& j : inst.jobs) res.cost += evalStep(j.f, res.completions.at(j.id));
      res.roundedCost = best->roundedCost;
      res.budget = B;
      res.guessSize = best->guessSize;
      res.capHit = capHit;
      res.roundBoundLhs = best->roundBoundLhs;
      res.roundBoundRhs = best->roundBoundRhs;
      return res;
    }
    if (capHit) break;
  }
  return std::nullopt;
}

}  // namespace ufpsched
