// Python bindings: the main operations exposed over JSON strings so the
// Python side stays free of GMP types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ufpsched/oracles.hpp"
#include "ufpsched/workbench.hpp"

namespace py = pybind11;
using namespace ufpsched;

namespace {

py::dict outcomeToDict(const DispatchOutcome& out) {
  py::dict d;
  d["infeasible"] = out.infeasible;
  d["cap_hit"] = out.capHit;
  d["result"] = out.infeasible ? std::string() : out.result.dump();
  return d;
}

}  // namespace

PYBIND11_MODULE(_ufpsched, m) {
  m.doc() = "Path-cover and cost-scheduling approximation workbench";

  m.def(
      "generate_ufp",
      [](unsigned long seed, size_t n, int m_, long demandHi, long sizeHi, long costHi) {
        return serializeInstance(generateUfp(seed, n, m_, {1, demandHi}, {1, sizeHi}, {1, costHi}));
      },
      py::arg("seed"), py::arg("n"), py::arg("m"), py::arg("demand_hi") = 8,
      py::arg("size_hi") = 6, py::arg("cost_hi") = 20,
      "Random feasible path-cover instance as a JSON string.");

  m.def(
      "generate_gsp",
      [](unsigned long seed, size_t n, size_t k, size_t releases, long weightBound) {
        return serializeInstance(generateGsp(seed, n, k, releases, weightBound));
      },
      py::arg("seed"), py::arg("n"), py::arg("k") = 2, py::arg("releases") = 1,
      py::arg("weight_bound") = 3,
      "Random class-form scheduling instance as a JSON string.");

  m.def(
      "solve",
      [](const std::string& instanceJson, const std::string& solver, const std::string& eps,
         size_t cap) {
        return outcomeToDict(dispatchSolve(parseInstance(instanceJson), solver,
                                           ratFromString(eps), cap));
      },
      py::arg("instance"), py::arg("solver"), py::arg("epsilon") = "1/2", py::arg("cap") = 0,
      "Run an approximation solver; returns {'result': json str, 'infeasible', 'cap_hit'}.");

  m.def(
      "oracle",
      [](const std::string& instanceJson, size_t cap) {
        try {
          return outcomeToDict(dispatchOracle(parseInstance(instanceJson), cap));
        } catch (const CapExceeded& e) {
          py::dict d;
          d["infeasible"] = false;
          d["cap_hit"] = true;
          d["result"] = std::string();
          return d;
        }
      },
      py::arg("instance"), py::arg("cap") = 0,
      "Exact brute-force optimum; returns {'result': json str, 'infeasible', 'cap_hit'}.");

  m.def(
      "roundtrip",
      [](const std::string& instanceJson) {
        return std::visit([](const auto& i) { return serializeInstance(i); },
                          parseInstance(instanceJson));
      },
      py::arg("instance"), "Parse and re-serialize (canonical form).");

  m.def(
      "run_experiment",
      [](const std::string& solver, const std::string& eps, unsigned long seed, size_t count,
         size_t n, int m_, size_t k, size_t releases, bool useOracle, bool recordRuntime,
         unsigned threads) {
        ExperimentConfig cfg;
        cfg.solver = solver;
        cfg.epsilon = ratFromString(eps);
        cfg.seed = seed;
        cfg.count = count;
        cfg.n = n;
        cfg.m = m_;
        cfg.k = k;
        cfg.releases = releases;
        cfg.useOracle = useOracle;
        cfg.recordRuntime = recordRuntime;
        cfg.threads = threads;
        auto rep = runExperiment(cfg);
        py::dict d;
        d["csv"] = rep.csv;
        d["summary"] = rep.summary.dump();
        return d;
      },
      py::arg("solver"), py::arg("epsilon") = "1/2", py::arg("seed") = 1, py::arg("count") = 10,
      py::arg("n") = 6, py::arg("m") = 5, py::arg("k") = 2, py::arg("releases") = 1,
      py::arg("use_oracle") = true, py::arg("record_runtime") = true, py::arg("threads") = 1,
      "Batch experiment; returns {'csv': str, 'summary': json str}.");
}
