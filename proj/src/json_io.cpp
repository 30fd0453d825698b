#include "ufpsched/workbench.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ufpsched {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

ordered_json ratToJson(const Rat& r) {
  ordered_json out;
  const mpz_class num = r.get_num();
  const mpz_class den = r.get_den();
  if (num.fits_slong_p())
    out["num"] = num.get_si();
  else
    out["num"] = num.get_str();
  if (den.fits_slong_p())
    out["den"] = den.get_si();
  else
    out["den"] = den.get_str();
  return out;
}

mpz_class intFromJson(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  if (j.is_number_integer()) return mpz_class((long)j.get<long long>());
  throw std::invalid_argument("rational component must be an integer or string");
}

Rat ratFromJson(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational must be a {num, den} object");
  Rat r(intFromJson(j.at("num")), intFromJson(j.at("den")));
  r.canonicalize();
  return r;
}

long longFromJson(const json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return (long)j.get<long long>();
}

ordered_json stepToJson(const StepCostFunction& f) {
  ordered_json out;
  ordered_json bps = ordered_json::array();
  for (const auto& [t, v] : f.breakpoints()) {
    ordered_json bp;
    bp["t"] = ratToJson(t);
    bp["v"] = ratToJson(v);
    bps.push_back(std::move(bp));
  }
  out["breakpoints"] = std::move(bps);
  if (f.unavailableAfter()) out["unavailable_after"] = ratToJson(*f.unavailableAfter());
  return out;
}

StepCostFunction stepFromJson(const json& j) {
  std::vector<std::pair<Rat, Rat>> bps;
  for (const auto& bp : j.at("breakpoints"))
    bps.emplace_back(ratFromJson(bp.at("t")), ratFromJson(bp.at("v")));
  std::optional<Rat> cap;
  if (j.contains("unavailable_after")) cap = ratFromJson(j.at("unavailable_after"));
  return StepCostFunction(std::move(bps), std::move(cap));
}

void checkHeader(const json& j, const char* kind) {
  if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
  if (j.value("schema_version", -1) != kSchemaVersion)
    throw std::invalid_argument("unsupported schema_version");
  if (j.value("kind", std::string()) != kind)
    throw std::invalid_argument(std::string("expected kind ") + kind);
}

}  // namespace

nlohmann::ordered_json toJson(const UfpCoverInstance& inst) {
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "ufp-cover";
  out["edge_count"] = inst.edgeCount;
  ordered_json demands = ordered_json::array();
  for (const auto& d : inst.demands) demands.push_back(ratToJson(d));
  out["demands"] = std::move(demands);
  ordered_json tasks = ordered_json::array();
  for (const auto& t : inst.tasks) {
    ordered_json jt;
    jt["id"] = t.id;
    jt["s"] = t.s;
    jt["t"] = t.t;
    jt["p"] = t.p;
    jt["c"] = ratToJson(t.c);
    tasks.push_back(std::move(jt));
  }
  out["tasks"] = std::move(tasks);
  return out;
}

nlohmann::ordered_json toJson(const GspInstance& inst) {
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = "gsp";
  out["weight_bound"] = inst.weightBound;
  ordered_json gs = ordered_json::array();
  for (const auto& g : inst.globalFunctions) gs.push_back(stepToJson(g));
  out["global_functions"] = std::move(gs);
  ordered_json jobs = ordered_json::array();
  for (const auto& j : inst.jobs) {
    ordered_json jj;
    jj["id"] = j.id;
    jj["p"] = j.p;
    jj["r"] = j.r;
    if (j.classIndex) jj["class"] = *j.classIndex;
    if (j.weight) jj["weight"] = *j.weight;
    jj["f"] = stepToJson(j.f);
    jobs.push_back(std::move(jj));
  }
  out["jobs"] = std::move(jobs);
  return out;
}

UfpCoverInstance ufpFromJson(const nlohmann::json& j) {
  checkHeader(j, "ufp-cover");
  UfpCoverInstance inst;
  inst.edgeCount = (int)longFromJson(j.at("edge_count"), "edge_count");
  for (const auto& d : j.at("demands")) inst.demands.push_back(ratFromJson(d));
  for (const auto& jt : j.at("tasks")) {
    UfpTask t;
    t.id = (int)longFromJson(jt.at("id"), "id");
    t.s = (int)longFromJson(jt.at("s"), "s");
    t.t = (int)longFromJson(jt.at("t"), "t");
    t.p = longFromJson(jt.at("p"), "p");
    t.c = ratFromJson(jt.at("c"));
    inst.tasks.push_back(std::move(t));
  }
  inst.validate();
  return inst;
}

GspInstance gspFromJson(const nlohmann::json& j) {
  checkHeader(j, "gsp");
  GspInstance inst;
  inst.weightBound = longFromJson(j.at("weight_bound"), "weight_bound");
  for (const auto& g : j.at("global_functions")) inst.globalFunctions.push_back(stepFromJson(g));
  for (const auto& jj : j.at("jobs")) {
    Job job;
    job.id = (int)longFromJson(jj.at("id"), "id");
    job.p = longFromJson(jj.at("p"), "p");
    job.r = longFromJson(jj.at("r"), "r");
    if (jj.contains("class")) job.classIndex = (int)longFromJson(jj.at("class"), "class");
    if (jj.contains("weight")) job.weight = longFromJson(jj.at("weight"), "weight");
    job.f = stepFromJson(jj.at("f"));
    inst.jobs.push_back(std::move(job));
  }
  inst.validate();
  return inst;
}

std::string serializeInstance(const UfpCoverInstance& inst) { return toJson(inst).dump(2) + "\n"; }
std::string serializeInstance(const GspInstance& inst) { return toJson(inst).dump(2) + "\n"; }

AnyInstance parseInstance(const std::string& text) {
  const json j = json::parse(text);
  const std::string kind = j.value("kind", std::string());
  if (kind == "ufp-cover") return ufpFromJson(j);
  if (kind == "gsp") return gspFromJson(j);
  throw std::invalid_argument("unknown instance kind: " + kind);
}

AnyInstance loadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseInstance(buf.str());
}

}  // namespace ufpsched
