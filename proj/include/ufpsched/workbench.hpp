#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ufpsched/model.hpp"

namespace ufpsched {

// ---------------------------------------------------------------------------
// JSON serialization. Schema version 1; top-level "kind" is "ufp-cover" or
// "gsp". Times and sizes are JSON integers; costs are {"num", "den"} objects
// (components as integers when they fit, decimal strings otherwise). Keys are
// emitted in a fixed canonical order so serialization is bit-exact.
// ---------------------------------------------------------------------------

nlohmann::ordered_json toJson(const UfpCoverInstance& inst);
nlohmann::ordered_json toJson(const GspInstance& inst);

UfpCoverInstance ufpFromJson(const nlohmann::json& j);
GspInstance gspFromJson(const nlohmann::json& j);

std::string serializeInstance(const UfpCoverInstance& inst);
std::string serializeInstance(const GspInstance& inst);

using AnyInstance = std::variant<UfpCoverInstance, GspInstance>;

/// Dispatches on the top-level "kind". Throws on unknown kinds or schema
/// versions.
AnyInstance parseInstance(const std::string& text);
AnyInstance loadInstanceFile(const std::string& path);

// ---------------------------------------------------------------------------
// Instance generators (deterministic in the seed).
// ---------------------------------------------------------------------------

using Range = std::pair<long, long>;  // inclusive

/// Random path-cover instance that is always feasible: a random nonempty
/// subset of the tasks is planted as a cover and every edge demand is capped
/// by the planted profile.
UfpCoverInstance generateUfp(unsigned long seed, size_t n, int m, Range demandRange,
                             Range sizeRange, Range costRange);

/// Random scheduling instance in class form f_j = w_j * g_{u(j)} with k
/// monotone random step functions and at most `releases` distinct release
/// dates (always including 0).
GspInstance generateGsp(unsigned long seed, size_t n, size_t k, size_t releases,
                        long weightBound);

// ---------------------------------------------------------------------------
// Experiment harness.
// ---------------------------------------------------------------------------

struct ExperimentConfig {
  std::string solver = "ufp-qptas";  // ufp-qptas | gsp-reduction | speedup | fewclass
  bool useOracle = true;
  Rat epsilon = Rat(1, 2);
  unsigned long seed = 1;  // instance i uses seed + i
  size_t count = 10;

  // Generator shape.
  size_t n = 6;
  int m = 5;           // edges (ufp)
  size_t k = 2;        // classes (gsp)
  size_t releases = 1; // distinct release dates (gsp)
  long weightBound = 3;

  long gridSize = 8;          // alpha grid (gsp-reduction)
  size_t cap = 0;             // 0 = solver default work cap
  bool recordRuntime = true;  // off => bit-identical reports for equal configs
  unsigned threads = 1;       // instances solved in parallel; assembly single-writer
};

struct ExperimentRow {
  std::string instanceId;
  std::string solver;
  Rat epsilon;
  std::optional<Rat> cost;
  std::optional<Rat> oracleCost;
  std::optional<Rat> ratio;  // cost / oracleCost, exact
  std::optional<Rat> bound;  // documented guarantee factor
  double runtimeSec = 0.0;
  bool feasible = false;
  std::optional<Rat> speed;  // speed factor where applicable
  bool capHit = false;
  bool infeasibleInstance = false;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;
  std::string csv;                 // RFC-4180, CRLF line endings
  nlohmann::ordered_json summary;  // config echo plus aggregates
};

ExperimentReport runExperiment(const ExperimentConfig& cfg);

/// One solver or oracle invocation rendered as JSON, shared by the CLI and
/// the Python bindings. `infeasible` and `capHit` drive the exit codes.
struct DispatchOutcome {
  nlohmann::ordered_json result;
  bool infeasible = false;
  bool capHit = false;
};

/// solver: ufp-qptas | gsp-reduction | speedup | fewclass. cap 0 = default.
DispatchOutcome dispatchSolve(const AnyInstance& inst, const std::string& solver,
                              const Rat& eps, size_t cap);

/// Exact optimum: subset enumeration (ufp-cover), permutation enumeration
/// (uniform-release gsp), or due-date enumeration (gsp with releases).
/// Propagates CapExceeded.
DispatchOutcome dispatchOracle(const AnyInstance& inst, size_t cap);

/// RFC-4180 rendering of rows (header + CRLF; fields quoted when needed).
std::string rowsToCsv(const std::vector<ExperimentRow>& rows, bool recordRuntime);

}  // namespace ufpsched
