#include "ufpsched/workbench.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace ufpsched {

namespace {

long draw(std::mt19937_64& rng, const Range& r) {
  if (r.first > r.second || r.first < 0)
    throw std::invalid_argument("generator range must be nonnegative and nonempty");
  return std::uniform_int_distribution<long>(r.first, r.second)(rng);
}

}  // namespace

UfpCoverInstance generateUfp(unsigned long seed, size_t n, int m, Range demandRange,
                             Range sizeRange, Range costRange) {
  if (m < 1) throw std::invalid_argument("generateUfp: need at least one edge");
  if (demandRange.first < 1 || sizeRange.first < 1 || costRange.first < 1)
    throw std::invalid_argument("generateUfp: ranges must be positive");
  std::mt19937_64 rng(seed);
  UfpCoverInstance inst;
  inst.edgeCount = m;

  for (size_t i = 0; i < n; ++i) {
    UfpTask t;
    t.id = (int)i;
    t.s = (int)std::uniform_int_distribution<int>(0, m - 1)(rng);
    t.t = (int)std::uniform_int_distribution<int>(t.s + 1, m)(rng);
    t.p = draw(rng, sizeRange);
    t.c = Rat(draw(rng, costRange));
    inst.tasks.push_back(std::move(t));
  }

  // Plant a nonempty random cover and cap every demand by its profile.
  std::vector<int> planted;
  for (size_t i = 0; i < n; ++i)
    if (rng() % 2 == 0) planted.push_back((int)i);
  if (planted.empty() && n > 0)
    planted.push_back((int)std::uniform_int_distribution<size_t>(0, n - 1)(rng));
  DemandProfile profile = inducedProfile(inst, planted);

  for (int e = 0; e < m; ++e) {
    const Rat cap = n == 0 ? Rat(0) : profile.heights[(size_t)e];
    inst.demands.push_back(std::min(Rat(draw(rng, demandRange)), cap));
  }
  inst.validate();
  return inst;
}

GspInstance generateGsp(unsigned long seed, size_t n, size_t k, size_t releases,
                        long weightBound) {
  if (k < 1) throw std::invalid_argument("generateGsp: need at least one class");
  if (releases < 1 || weightBound < 1)
    throw std::invalid_argument("generateGsp: releases and weightBound must be positive");
  std::mt19937_64 rng(seed);
  GspInstance inst;
  inst.weightBound = weightBound;

  for (size_t u = 0; u < k; ++u) {
    const int nb = (int)std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<std::pair<Rat, Rat>> bps;
    long t = 0;
    Rat v(0);
    for (int b = 0; b < nb; ++b) {
      t += std::uniform_int_distribution<long>(1, 6)(rng);
      v += Rat(std::uniform_int_distribution<long>(1, 10)(rng));
      bps.emplace_back(Rat(t), v);
    }
    inst.globalFunctions.emplace_back(std::move(bps));
  }

  std::vector<long> pool{0};
  while (pool.size() < releases) {
    const long r = std::uniform_int_distribution<long>(1, 4 * (long)releases)(rng);
    if (std::find(pool.begin(), pool.end(), r) == pool.end()) pool.push_back(r);
  }

  for (size_t i = 0; i < n; ++i) {
    Job j;
    j.id = (int)i + 1;
    j.p = std::uniform_int_distribution<long>(1, 3)(rng);
    j.r = pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
    j.classIndex = (int)std::uniform_int_distribution<size_t>(0, k - 1)(rng);
    j.weight = std::uniform_int_distribution<long>(1, weightBound)(rng);
    j.f = inst.globalFunctions[(size_t)*j.classIndex].scaled(Rat(*j.weight));
    inst.jobs.push_back(std::move(j));
  }
  inst.validate();
  return inst;
}

}  // namespace ufpsched
