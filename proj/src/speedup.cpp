#include "ufpsched/speedup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace ufpsched {

Rat artificialRelease(long p, const Rat& eps) {
  if (p < 1) throw std::invalid_argument("artificialRelease: p must be >= 1");
  const Rat x = eps * Rat(p) / (1 + eps);
  return ratPow(1 + eps, floorLog(1 + eps, x));
}

Rat roundCompletion(const Rat& C, const Rat& eps) {
  if (C <= 0) throw std::invalid_argument("roundCompletion: C must be positive");
  return ratPow(1 + eps, ceilLog(1 + eps, C));
}

IntervalGrid::IntervalGrid(const Rat& e) : eps(e) {
  if (eps <= 0 || eps > 1) throw std::invalid_argument("IntervalGrid: eps must be in (0, 1]");
  const Rat k = 4 * (1 + eps) / ratPow(eps, 3);
  if (!isInteger(k)) throw std::invalid_argument("IntervalGrid: 4(1+eps)/eps^3 must be integral");
  pointsPerInterval = (long)k.get_num().get_si();
}

Rat IntervalGrid::R(long t) const { return ratPow(1 + eps, t); }

Rat IntervalGrid::intervalLength(long t) const { return eps * R(t); }

long IntervalGrid::intervalOf(const Rat& x) const {
  if (x <= 0) throw std::invalid_argument("intervalOf: x must be positive");
  return floorLog(1 + eps, x);
}

Rat IntervalGrid::finePoint(long t, long k) const {
  if (k < 0 || k > pointsPerInterval) throw std::invalid_argument("finePoint: k out of range");
  return R(t) * (1 + Rat(k) * ratPow(eps, 4) / (4 * (1 + eps)));
}

Rat IntervalGrid::snapDown(const Rat& x) const {
  const long t = intervalOf(x);
  const Rat frac = (x / R(t) - 1) * Rat(pointsPerInterval) / eps;
  return finePoint(t, floorDiv(frac));
}

Rat IntervalGrid::snapUp(const Rat& x) const {
  const long t = intervalOf(x);
  const Rat frac = (x / R(t) - 1) * Rat(pointsPerInterval) / eps;
  return finePoint(t, ceilDiv(frac));
}

// ---------------------------------------------------------------------------
// Pattern enumeration
// ---------------------------------------------------------------------------

std::vector<IntervalPattern> enumeratePatterns(const IntervalGrid& grid, long minSlotUnits,
                                               long maxSlots) {
  if (minSlotUnits < 1 || maxSlots < 0) throw std::invalid_argument("enumeratePatterns: bad args");
  const long K = grid.pointsPerInterval;
  std::vector<IntervalPattern> out;
  std::vector<std::pair<long, long>> slots;

  // Free maximal segments of [0, K) once the current slots are removed.
  auto freeSegments = [&]() {
    std::vector<std::pair<long, long>> segs;
    long pos = 0;
    for (const auto& s : slots) {
      if (pos < s.first) segs.emplace_back(pos, s.first);
      pos = s.second;
    }
    if (pos < K) segs.emplace_back(pos, K);
    return segs;
  };

  auto emitWindows = [&]() {
    IntervalPattern p;
    p.slots = slots;
    out.push_back(p);  // canonical empty window at [0, 0)
    for (const auto& seg : freeSegments())
      for (long a = seg.first; a < seg.second; ++a)
        for (long b = a + 1; b <= seg.second; ++b) {
          p.windowBeg = a;
          p.windowEnd = b;
          out.push_back(p);
        }
  };

  // Slots in increasing position; `from` is the first admissible start.
  auto rec = [&](auto&& self, long from) -> void {
    emitWindows();
    if ((long)slots.size() == maxSlots) return;
    for (long a = from; a + minSlotUnits <= K; ++a)
      for (long b = a + minSlotUnits; b <= K; ++b) {
        slots.emplace_back(a, b);
        self(self, b);
        slots.pop_back();
      }
  };
  rec(rec, 0);
  return out;
}

unsigned long long countPatterns(long gridUnits, long minSlotUnits, long maxSlots) {
  // Left-to-right layout recurrence, independent of the explicit generator.
  // State: units remaining, slots still allowed, window still unplaced.
  std::map<std::tuple<long, long, bool>, unsigned long long> memo;
  auto count = [&](auto&& self, long rem, long slotsLeft, bool windowFree) -> unsigned long long {
    if (rem == 0) return 1;
    auto key = std::make_tuple(rem, slotsLeft, windowFree);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    unsigned long long total = self(self, rem - 1, slotsLeft, windowFree);  // idle unit
    if (slotsLeft > 0)
      for (long len = minSlotUnits; len <= rem; ++len)
        total += self(self, rem - len, slotsLeft - 1, windowFree);
    if (windowFree)
      for (long len = 1; len <= rem; ++len)
        total += self(self, rem - len, slotsLeft, false);
    memo[key] = total;
    return total;
  };
  return count(count, gridUnits, maxSlots, true);
}

// ---------------------------------------------------------------------------
// Slot-assignment LP
// ---------------------------------------------------------------------------

SlpModel buildSlp(const PatternCombination& comb, const std::vector<Job>& jobs,
                  const IntervalGrid& grid) {
  SlpModel m;
  m.numSlots = comb.slots.size();
  m.numWindows = comb.windows.size();
  m.numJobs = jobs.size();

  std::vector<Rat> releases;
  for (const auto& j : jobs) releases.push_back(artificialRelease(j.p, grid.eps));

  // Variables, slot-major then window-major; (5)/(6) pin with upper bound 0.
  for (size_t s = 0; s < m.numSlots; ++s) {
    const Slot& slot = comb.slots[s];
    const Rat coefTime = grid.R(slot.intervalIndex + 1);
    for (size_t j = 0; j < jobs.size(); ++j) {
      const bool forced =
          releases[j] > slot.beg || Rat(jobs[j].p) > slot.end - slot.beg;
      m.lp.addVariable(evalStep(jobs[j].f, coefTime), Rat(0),
                       forced ? std::optional<Rat>(Rat(0)) : std::nullopt);
    }
  }
  for (size_t w = 0; w < m.numWindows; ++w) {
    const long t = std::get<0>(comb.windows[w]);
    const Rat coefTime = grid.R(t + 1);
    for (size_t j = 0; j < jobs.size(); ++j) {
      const bool forced =
          releases[j] > grid.R(t) || Rat(jobs[j].p) > grid.eps * grid.intervalLength(t);
      m.lp.addVariable(evalStep(jobs[j].f, coefTime), Rat(0),
                       forced ? std::optional<Rat>(Rat(0)) : std::nullopt);
    }
  }

  const size_t nv = m.lp.numVars();
  // (2): each job fully assigned.
  for (size_t j = 0; j < jobs.size(); ++j) {
    std::vector<Rat> row(nv, Rat(0));
    for (size_t s = 0; s < m.numSlots; ++s) row[m.xIndex(s, j)] = 1;
    for (size_t w = 0; w < m.numWindows; ++w) row[m.yIndex(w, j)] = 1;
    m.lp.addRow(std::move(row), Relation::Equal, Rat(1));
  }
  // (3): slot capacity one.
  for (size_t s = 0; s < m.numSlots; ++s) {
    std::vector<Rat> row(nv, Rat(0));
    for (size_t j = 0; j < jobs.size(); ++j) row[m.xIndex(s, j)] = 1;
    m.lp.addRow(std::move(row), Relation::LessEq, Rat(1));
  }
  // (4): window volume at most rem(t).
  for (size_t w = 0; w < m.numWindows; ++w) {
    std::vector<Rat> row(nv, Rat(0));
    for (size_t j = 0; j < jobs.size(); ++j) row[m.yIndex(w, j)] = Rat(jobs[j].p);
    m.lp.addRow(std::move(row), Relation::LessEq,
                std::get<2>(comb.windows[w]) - std::get<1>(comb.windows[w]));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Rounding (matching on window vertices)
// ---------------------------------------------------------------------------

SlotAssignment roundSlp(const SlpModel& model, const PatternCombination& comb,
                        const std::vector<Job>& jobs, const IntervalGrid& grid,
                        const BasicSolution& fractional) {
  if (fractional.status != LpStatus::Optimal)
    throw std::invalid_argument("roundSlp: fractional solution not optimal");
  const size_t n = jobs.size();

  // Matching vertices: one per slot, then ceil(sum_j y) copies per window,
  // filled greedily by nonincreasing job size so consecutive copies carry
  // nonincreasing maximal sizes.
  struct Edge {
    size_t job;
    size_t vertex;
    Rat cost;
  };
  std::vector<Edge> edges;
  size_t numVertices = model.numSlots;
  // vertex -> (-1 for slots) window index
  std::vector<int> vertexWindow(model.numSlots, -1);

  for (size_t s = 0; s < model.numSlots; ++s) {
    const Rat coefTime = grid.R(comb.slots[s].intervalIndex + 1);
    for (size_t j = 0; j < n; ++j) {
      const Rat& v = fractional.values[model.xIndex(s, j)];
      if (v > 0) edges.push_back({j, s, evalStep(jobs[j].f, coefTime)});
    }
  }
  for (size_t w = 0; w < model.numWindows; ++w) {
    std::vector<std::pair<size_t, Rat>> mass;  // (job, y) with y > 0
    Rat total(0);
    for (size_t j = 0; j < n; ++j) {
      const Rat& v = fractional.values[model.yIndex(w, j)];
      if (v > 0) {
        mass.emplace_back(j, v);
        total += v;
      }
    }
    if (mass.empty()) continue;
    std::sort(mass.begin(), mass.end(), [&](const auto& a, const auto& b) {
      if (jobs[a.first].p != jobs[b.first].p) return jobs[a.first].p > jobs[b.first].p;
      return jobs[a.first].id < jobs[b.first].id;
    });
    const long k = ceilDiv(total);
    const size_t base = numVertices;
    for (long i = 0; i < k; ++i) vertexWindow.push_back((int)w);
    numVertices += (size_t)k;

    const Rat coefTime = grid.R(std::get<0>(comb.windows[w]) + 1);
    size_t cur = 0;
    Rat fill(0);  // mass already in vertex `cur`
    for (auto& [j, y] : mass) {
      Rat left = y;
      while (left > 0) {
        Rat room = Rat(1) - fill;
        Rat take = std::min(left, room);
        edges.push_back({j, base + cur, evalStep(jobs[j].f, coefTime)});
        fill += take;
        left -= take;
        if (fill == 1 && left > 0) {
          ++cur;
          fill = 0;
        }
      }
    }
  }

  // Min-cost matching LP; vertices of this polytope are integral.
  LinearProgram mlp;
  for (const auto& e : edges) mlp.addVariable(e.cost, Rat(0), Rat(1));
  for (size_t j = 0; j < n; ++j) {
    std::vector<Rat> row(edges.size(), Rat(0));
    for (size_t e = 0; e < edges.size(); ++e)
      if (edges[e].job == j) row[e] = 1;
    mlp.addRow(std::move(row), Relation::Equal, Rat(1));
  }
  for (size_t v = 0; v < numVertices; ++v) {
    std::vector<Rat> row(edges.size(), Rat(0));
    bool any = false;
    for (size_t e = 0; e < edges.size(); ++e)
      if (edges[e].vertex == v) {
        row[e] = 1;
        any = true;
      }
    if (any) mlp.addRow(std::move(row), Relation::LessEq, Rat(1));
  }
  BasicSolution msol = solveToBasicOptimum(mlp);
  if (msol.status != LpStatus::Optimal)
    throw std::logic_error("roundSlp: matching must be feasible");
  if (msol.objective > fractional.objective)
    throw std::logic_error("roundSlp: rounding increased the cost");

  SlotAssignment out;
  out.slotOf.assign(n, -1);
  out.windowOf.assign(n, -1);
  out.cost = msol.objective;
  for (size_t e = 0; e < edges.size(); ++e) {
    const Rat& z = msol.values[e];
    if (z == 0) continue;
    if (z != 1) throw std::logic_error("roundSlp: matching vertex not integral");
    const auto& edge = edges[e];
    if (out.slotOf[edge.job] != -1 || out.windowOf[edge.job] != -1)
      throw std::logic_error("roundSlp: job matched twice");
    const int w = vertexWindow[edge.vertex];
    if (w < 0)
      out.slotOf[edge.job] = (int)edge.vertex;
    else
      out.windowOf[edge.job] = w;
  }

  // Exact post-checks: (2), (3), (5), (6) and the relaxed (4).
  std::vector<int> slotUse(model.numSlots, 0);
  std::vector<Rat> windowVol(model.numWindows, Rat(0));
  for (size_t j = 0; j < n; ++j) {
    if ((out.slotOf[j] == -1) == (out.windowOf[j] == -1))
      throw std::logic_error("roundSlp: job must get exactly one structure");
    const Rat rj = artificialRelease(jobs[j].p, grid.eps);
    if (out.slotOf[j] >= 0) {
      const Slot& s = comb.slots[(size_t)out.slotOf[j]];
      if (++slotUse[(size_t)out.slotOf[j]] > 1)
        throw std::logic_error("roundSlp: slot used twice");
      if (rj > s.beg || Rat(jobs[j].p) > s.end - s.beg)
        throw std::logic_error("roundSlp: slot assignment violates (5)");
    } else {
      const size_t w = (size_t)out.windowOf[j];
      const long t = std::get<0>(comb.windows[w]);
      if (rj > grid.R(t) || Rat(jobs[j].p) > grid.eps * grid.intervalLength(t))
        throw std::logic_error("roundSlp: window assignment violates (6)");
      windowVol[w] += jobs[j].p;
    }
  }
  for (size_t w = 0; w < model.numWindows; ++w) {
    const long t = std::get<0>(comb.windows[w]);
    const Rat rem = std::get<2>(comb.windows[w]) - std::get<1>(comb.windows[w]);
    if (windowVol[w] > rem + grid.eps * grid.intervalLength(t))
      throw std::logic_error("roundSlp: window overflow exceeds eps|I_t|");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scheduler
// ---------------------------------------------------------------------------

namespace {

// Evaluation shift: the LP optimizes placeholder costs f_j(tau / shift) so
// that, after the final speedup, realized rounded completions pay no more
// than the LP objective while the schedule each permutation induces pays no
// more than its unit-speed cost.
struct SpeedupConstants {
  long stretchExp;    // a: witness times are multiplied by (1+eps)^a
  Rat stretch;        // (1+eps)^a
  Rat shift;          // d: LP coefficient f_j(R_{t+1} / d)
  long speedExp;      // c: the realized schedule runs at (1+eps)^c
  Rat speed;
};

SpeedupConstants computeConstants(const Rat& eps) {
  SpeedupConstants k;
  const Rat onePlus = 1 + eps;
  k.stretchExp = ceilLog(onePlus, onePlus / eps) + 1;
  k.stretch = ratPow(onePlus, k.stretchExp);
  const Rat fineRatio = ratPow(eps, 4) / (4 * onePlus);
  k.shift = onePlus * k.stretch / (1 - fineRatio);

  // Smallest speed exponent making every realized rounded completion land
  // below R_{t+1}/shift: (1+e)((1 + e^2/(1+e) + e)/(1+e)^c + rho) <= 1/shift,
  // where rho bounds the accumulated artificial-release delays relative to
  // the machine-time position.
  const Rat sizeInfl = 1 + eps * eps / (2 * onePlus);
  const Rat rho = eps / onePlus * std::max(Rat(eps * eps), Rat(sizeInfl / k.stretch));
  const Rat head = 1 + eps * eps / onePlus + eps;
  if (onePlus * rho >= 1 / k.shift)
    throw std::invalid_argument("solveSpeedup: eps too large for the guarantee chain");
  long c = k.stretchExp + 2;
  while (onePlus * (head / ratPow(onePlus, c) + rho) > 1 / k.shift) ++c;
  k.speedExp = c;
  k.speed = ratPow(onePlus, c);
  return k;
}

struct Witness {
  PatternCombination comb;
  std::vector<int> slotOf;    // per job index, -1 if window job
  std::vector<int> windowOf;  // per job index, -1 if slot job
  Rat objective;              // value of (1) for this assignment
};

// Layout induced by a permutation: each job's structure ends near
// stretch * C_j; large jobs (p > eps|I_t|) get their own snapped slot, small
// jobs share one window per interval placed in the largest free gap.
std::optional<Witness> buildWitness(const std::vector<Job>& jobs,
                                    const std::vector<size_t>& order,
                                    const std::vector<Job>& shiftedJobs,
                                    const IntervalGrid& grid, const SpeedupConstants& k) {
  const size_t n = jobs.size();
  Witness w;
  w.slotOf.assign(n, -1);
  w.windowOf.assign(n, -1);

  struct SmallJob {
    size_t j;
    long t;
  };
  std::vector<SmallJob> smalls;
  std::map<long, Rat> windowNeed;  // interval -> small volume
  Rat prevEnd(0);
  long C = 0;
  for (size_t j : order) {
    C += jobs[j].p;
    const Rat E = k.stretch * Rat(C);
    const long t = grid.intervalOf(E);
    if (Rat(jobs[j].p) > grid.eps * grid.intervalLength(t)) {
      Slot s;
      s.end = grid.snapUp(E);
      s.beg = grid.snapDown(E - jobs[j].p);
      s.intervalIndex = t;
      if (s.beg < prevEnd) return std::nullopt;  // snapping collided
      if (artificialRelease(jobs[j].p, grid.eps) > s.beg) return std::nullopt;
      prevEnd = s.end;
      w.slotOf[j] = (int)w.comb.slots.size();
      w.comb.slots.push_back(std::move(s));
    } else {
      smalls.push_back({j, t});
      windowNeed[t] += jobs[j].p;
    }
  }

  // One window per interval with small jobs: the largest slot-free gap of
  // I_t, snapped inward to the fine grid.
  std::map<long, int> windowIndex;
  for (const auto& [t, need] : windowNeed) {
    const Rat lo = grid.R(t), hi = grid.R(t + 1);
    std::vector<std::pair<Rat, Rat>> gaps{{lo, hi}};
    for (const Slot& s : w.comb.slots) {
      std::vector<std::pair<Rat, Rat>> next;
      for (auto& [a, b] : gaps) {
        const Rat ga = std::max(a, s.beg), gb = std::min(b, s.end);
        if (ga >= gb) {
          next.emplace_back(a, b);
          continue;
        }
        if (a < ga) next.emplace_back(a, ga);
        if (gb < b) next.emplace_back(gb, b);
      }
      gaps = std::move(next);
    }
    std::optional<std::pair<Rat, Rat>> best;
    for (auto& [a, b] : gaps) {
      const Rat wa = grid.snapUp(a);
      const Rat wb = b == hi ? hi : grid.snapDown(b);
      if (wa >= wb) continue;
      if (!best || wb - wa > best->second - best->first) best = {wa, wb};
    }
    if (!best || best->second - best->first < need) return std::nullopt;
    windowIndex[t] = (int)w.comb.windows.size();
    w.comb.windows.emplace_back(t, best->first, best->second);
  }
  for (const auto& s : smalls) w.windowOf[s.j] = windowIndex.at(s.t);

  // The assignment must satisfy (5)/(6) and pay, per job, at most the job's
  // unit-speed cost under the shifted evaluation.
  w.objective = 0;
  C = 0;
  for (size_t j : order) {
    C += jobs[j].p;
    const Rat rj = artificialRelease(jobs[j].p, grid.eps);
    long t;
    if (w.slotOf[j] >= 0) {
      const Slot& s = w.comb.slots[(size_t)w.slotOf[j]];
      if (rj > s.beg || Rat(jobs[j].p) > s.end - s.beg)
        throw std::logic_error("buildWitness: slot violates (5)");
      t = s.intervalIndex;
    } else {
      const auto& win = w.comb.windows[(size_t)w.windowOf[j]];
      t = std::get<0>(win);
      if (rj > grid.R(t) || Rat(jobs[j].p) > grid.eps * grid.intervalLength(t))
        throw std::logic_error("buildWitness: window violates (6)");
    }
    if (grid.R(t + 1) > k.shift * Rat(C))
      throw std::logic_error("buildWitness: structure interval exceeds the shift budget");
    w.objective += evalStep(shiftedJobs[j].f, grid.R(t + 1));
  }
  // Window capacity (4).
  std::map<long, Rat> vol;
  for (const auto& s : smalls) vol[s.t] += jobs[s.j].p;
  for (const auto& [t, v] : vol) {
    const auto& win = w.comb.windows[(size_t)windowIndex.at(t)];
    if (v > std::get<2>(win) - std::get<1>(win))
      throw std::logic_error("buildWitness: window capacity violated");
  }
  return w;
}

// Sequential realization of an integral assignment at the computed speed.
// Jobs run in machine-position order; every rounded completion must land at
// or below R_{t+1}/shift for its structure's interval, which keeps the
// realized cost at or below the integral LP objective.
Schedule realize(const PatternCombination& comb, const SlotAssignment& asg,
                 const std::vector<Job>& jobs, const IntervalGrid& grid,
                 const SpeedupConstants& k) {
  const size_t n = jobs.size();
  struct Item {
    Rat key;      // machine position of the structure start
    int tiebreak;  // job id
    size_t j;
    Rat mappedStart;
    long t;
  };
  std::vector<Item> items;
  for (size_t j = 0; j < n; ++j) {
    Item it;
    it.j = j;
    it.tiebreak = jobs[j].id;
    if (asg.slotOf[j] >= 0) {
      const Slot& s = comb.slots[(size_t)asg.slotOf[j]];
      it.key = s.beg;
      it.t = s.intervalIndex;
    } else {
      const auto& win = comb.windows[(size_t)asg.windowOf[j]];
      it.key = std::get<1>(win);
      it.t = std::get<0>(win);
    }
    it.mappedStart = it.key / k.speed;
    items.push_back(std::move(it));
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.tiebreak < b.tiebreak;
  });

  Schedule sched;
  sched.speed = k.speed;
  Rat now(0);
  for (const auto& it : items) {
    const Rat rj = artificialRelease(jobs[it.j].p, grid.eps);
    const Rat start = std::max({now, it.mappedStart, rj});
    now = start + Rat(jobs[it.j].p) / k.speed;
    if (roundCompletion(now, grid.eps) > grid.R(it.t + 1) / k.shift)
      throw std::logic_error("realize: completion exceeds the per-interval budget");
    sched.starts.emplace_back(jobs[it.j].id, start);
  }
  return sched;
}

}  // namespace

long speedupExponent(const Rat& eps) { return computeConstants(eps).speedExp; }

std::optional<SpeedupResult> solveSpeedup(const GspInstance& inst, const Rat& eps,
                                          const SpeedupConfig& cfg) {
  inst.validate();
  for (const auto& j : inst.jobs) {
    if (j.r != 0) throw std::invalid_argument("solveSpeedup: releases must all be 0");
    if (j.f.unavailableAfter())
      throw std::invalid_argument("solveSpeedup: jobs must stay available");
  }
  const IntervalGrid grid(eps);
  const SpeedupConstants k = computeConstants(eps);

  SpeedupResult best;
  best.speed = k.speed;
  best.speedExponent = k.speedExp;
  if (inst.jobs.empty()) {
    best.cost = 0;
    return best;
  }

  const std::vector<Job>& jobs = inst.jobs;
  std::vector<Job> shifted = jobs;  // placeholder costs f_j(tau / shift)
  for (auto& j : shifted) {
    std::vector<std::pair<Rat, Rat>> bps;
    for (const auto& [t, v] : j.f.breakpoints()) bps.emplace_back(t * k.shift, v);
    j.f = StepCostFunction(std::move(bps));
  }

  std::vector<size_t> order(jobs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return jobs[a].id < jobs[b].id; });

  bool found = false;
  do {
    if (best.combinationsTried >= cfg.combinationCap) {
      best.capHit = true;
      break;
    }
    ++best.combinationsTried;
    auto witness = buildWitness(jobs, order, shifted, grid, k);
    if (!witness) continue;
    if (found && witness->objective >= best.cost) continue;  // cannot improve

    SlpModel model = buildSlp(witness->comb, shifted, grid);
    BasicSolution sol = solveToBasicOptimum(model.lp);
    if (sol.status != LpStatus::Optimal)
      throw std::logic_error("solveSpeedup: LP infeasible despite a feasible witness");
    if (sol.objective > witness->objective)
      throw std::logic_error("solveSpeedup: LP optimum above the witness value");

    SlotAssignment rounded = roundSlp(model, witness->comb, shifted, grid, sol);
    Schedule sched = realize(witness->comb, rounded, jobs, grid, k);

    Rat cost(0);
    for (const auto& j : jobs)
      cost += evalStep(j.f, roundCompletion(sched.completion(inst, j.id), eps));
    if (cost > rounded.cost)
      throw std::logic_error("solveSpeedup: realized cost above the rounded LP cost");

    if (!found || cost < best.cost) {
      best.schedule = std::move(sched);
      best.cost = std::move(cost);
      found = true;
    }
  } while (std::next_permutation(order.begin(), order.end(), [&](size_t a, size_t b) {
    return jobs[a].id < jobs[b].id;
  }));

  if (!found) return std::nullopt;
  return best;
}

bool validateSpeedSchedule(const GspInstance& inst, const Schedule& sched, const Rat& speed,
                           const Rat& eps) {
  if (sched.starts.size() != inst.jobs.size()) return false;
  std::vector<std::pair<Rat, Rat>> spans;
  for (const auto& [id, start] : sched.starts) {
    const Job& j = inst.jobById(id);
    if (start < artificialRelease(j.p, eps)) return false;
    spans.emplace_back(start, start + Rat(j.p) / speed);
  }
  std::sort(spans.begin(), spans.end());
  for (size_t i = 1; i < spans.size(); ++i)
    if (spans[i].first < spans[i - 1].second) return false;
  return true;
}

}  // namespace ufpsched
