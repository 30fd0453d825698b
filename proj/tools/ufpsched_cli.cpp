// Command-line front end: instance generation, solving, exact oracles,
// side-by-side comparison, and batch CSV reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ufpsched/fewclass.hpp"
#include "ufpsched/gsp_reduction.hpp"
#include "ufpsched/oracles.hpp"
#include "ufpsched/speedup.hpp"
#include "ufpsched/ufp_qptas.hpp"
#include "ufpsched/workbench.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kInfeasible = 2;
constexpr int kCapExceeded = 3;

using namespace ufpsched;

// Accepts "p/q", integers, and plain decimals ("0.25").
Rat parseRat(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) return ratFromString(s);
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::string den = "1" + std::string(s.size() - dot - 1, '0');
  return ratFromString(digits + "/" + den);
}

void writeOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path-cover and cost-scheduling approximation workbench"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a random instance as JSON");
  std::string genKind = "ufp";
  unsigned long seed = 1;
  size_t n = 6, k = 2, releases = 1;
  int m = 5;
  long weightBound = 3;
  std::string outPath;
  gen->add_option("--kind", genKind, "ufp | gsp")->check(CLI::IsMember({"ufp", "gsp"}));
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--n", n, "tasks / jobs");
  gen->add_option("--m", m, "edges (ufp)");
  gen->add_option("--k", k, "cost-function classes (gsp)");
  gen->add_option("--releases", releases, "distinct release dates (gsp)");
  gen->add_option("--weight-bound", weightBound, "maximum job weight (gsp)");
  gen->add_option("--out", outPath, "output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Run an approximation solver on a JSON instance");
  std::string solveFile, solver = "ufp-qptas", epsStr = "1/2";
  size_t cap = 0;
  std::string solveOut;
  solve->add_option("file", solveFile, "instance JSON")->required();
  solve->add_option("--solver", solver, "ufp-qptas | gsp-reduction | speedup | fewclass");
  solve->add_option("--epsilon", epsStr, "accuracy parameter (rational or decimal)");
  solve->add_option("--cap", cap, "work cap (0 = solver default)");
  solve->add_option("--out", solveOut, "result JSON file (default stdout)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact brute-force optimum of a JSON instance");
  std::string oracleFile, oracleOut;
  size_t oracleCap = 0;
  oracle->add_option("file", oracleFile, "instance JSON")->required();
  oracle->add_option("--cap", oracleCap, "size cap before refusing (0 = default)");
  oracle->add_option("--out", oracleOut, "result JSON file (default stdout)");

  // compare
  auto* cmp = app.add_subcommand("compare", "Solver vs exact oracle on one instance");
  std::string cmpFile, cmpSolver = "ufp-qptas", cmpEps = "1/2", cmpOut;
  size_t cmpCap = 0;
  cmp->add_option("file", cmpFile, "instance JSON")->required();
  cmp->add_option("--solver", cmpSolver, "ufp-qptas | gsp-reduction | speedup | fewclass");
  cmp->add_option("--epsilon", cmpEps, "accuracy parameter");
  cmp->add_option("--cap", cmpCap, "work cap (0 = default)");
  cmp->add_option("--out", cmpOut, "result JSON file (default stdout)");

  // report
  auto* rep = app.add_subcommand("report", "Batch experiment: CSV rows plus a JSON summary");
  ExperimentConfig ecfg;
  std::string repEps = "1/2", repOut, repSummary;
  bool noOracle = false, noRuntime = false;
  rep->add_option("--solver", ecfg.solver, "ufp-qptas | gsp-reduction | speedup | fewclass");
  rep->add_option("--epsilon", repEps, "accuracy parameter");
  rep->add_option("--seed", ecfg.seed, "base seed; instance i uses seed+i");
  rep->add_option("--count", ecfg.count, "number of instances");
  rep->add_option("--n", ecfg.n, "tasks / jobs per instance");
  rep->add_option("--m", ecfg.m, "edges (ufp)");
  rep->add_option("--k", ecfg.k, "classes (gsp)");
  rep->add_option("--releases", ecfg.releases, "distinct release dates (fewclass)");
  rep->add_option("--weight-bound", ecfg.weightBound, "maximum job weight (gsp)");
  rep->add_option("--cap", ecfg.cap, "work cap (0 = default)");
  rep->add_option("--threads", ecfg.threads, "parallel instance workers");
  rep->add_flag("--no-oracle", noOracle, "skip the oracle; ratio column left empty");
  rep->add_flag("--no-runtime", noRuntime, "omit runtimes for bit-identical reports");
  rep->add_option("--out", repOut, "CSV file (default stdout)");
  rep->add_option("--summary-out", repSummary, "summary JSON file (default omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      if (genKind == "ufp")
        writeOut(outPath, serializeInstance(generateUfp(seed, n, m, {1, 8}, {1, 6}, {1, 20})));
      else
        writeOut(outPath, serializeInstance(generateGsp(seed, n, k, releases, weightBound)));
      return kOk;
    }
    if (*solve) {
      auto any = loadInstanceFile(solveFile);
      auto outcome = dispatchSolve(any, solver, parseRat(epsStr), cap);
      if (outcome.infeasible) {
        std::cerr << "infeasible instance\n";
        return kInfeasible;
      }
      writeOut(solveOut, outcome.result.dump(2) + "\n");
      return outcome.capHit ? kCapExceeded : kOk;
    }
    if (*oracle) {
      auto any = loadInstanceFile(oracleFile);
      try {
        auto outcome = dispatchOracle(any, oracleCap);
        if (outcome.infeasible) {
          std::cerr << "infeasible instance\n";
          return kInfeasible;
        }
        writeOut(oracleOut, outcome.result.dump(2) + "\n");
        return kOk;
      } catch (const CapExceeded& e) {
        std::cerr << e.what() << "\n";
        return kCapExceeded;
      }
    }
    if (*cmp) {
      auto any = loadInstanceFile(cmpFile);
      const Rat eps = parseRat(cmpEps);
      auto solved = dispatchSolve(any, cmpSolver, eps, cmpCap);
      if (solved.infeasible) {
        std::cerr << "infeasible instance\n";
        return kInfeasible;
      }
      int rc = solved.capHit ? kCapExceeded : kOk;
      nlohmann::ordered_json out;
      out["solve"] = solved.result;
      try {
        auto exact = dispatchOracle(any, cmpCap);
        if (exact.infeasible) {
          std::cerr << "infeasible instance\n";
          return kInfeasible;
        }
        out["oracle"] = exact.result;
        const Rat c = ratFromString(solved.result.at("cost").get<std::string>());
        const Rat o = ratFromString(exact.result.at("cost").get<std::string>());
        if (o > 0) out["ratio"] = ratToDouble(c / o);
      } catch (const CapExceeded& e) {
        std::cerr << e.what() << "\n";
        rc = kCapExceeded;
      }
      writeOut(cmpOut, out.dump(2) + "\n");
      return rc;
    }
    if (*rep) {
      ecfg.epsilon = parseRat(repEps);
      ecfg.useOracle = !noOracle;
      ecfg.recordRuntime = !noRuntime;
      auto report = runExperiment(ecfg);
      writeOut(repOut, report.csv);
      if (!repSummary.empty()) writeOut(repSummary, report.summary.dump(2) + "\n");
      bool anyInfeasible = false, anyCap = false;
      for (const auto& r : report.rows) {
        anyInfeasible |= r.infeasibleInstance;
        anyCap |= r.capHit;
      }
      if (anyInfeasible) return kInfeasible;
      return anyCap ? kCapExceeded : kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
