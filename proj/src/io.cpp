#include "shnr/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace shnr {
namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::Parse, what); }

Complex complex_from_json(const Json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    parse_error("expected a [re, im] pair of numbers, got " + e.dump());
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

std::size_t count_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0) {
    parse_error(std::string("field '") + key + "' must be a non-negative integer");
  }
  return j[key].get<std::size_t>();
}

template <class T>
T get_or(const Json& j, const char* key) {
  if (!j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  try {
    return j[key].get<T>();
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("field '") + key + "': " + e.what());
  }
}

Json flags_json(const Comparison& c) {
  Json j;
  j["seminorm"] = c.seminorm;
  j["label"] = c.label;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["equality"] = c.equality;
  j["conditional"] = c.conditional;
  j["slack"] = c.slack;
  return j;
}

Comparison comparison_from_json(const Json& j) {
  Comparison c;
  c.seminorm = get_or<std::string>(j, "seminorm");
  c.label = get_or<std::string>(j, "label");
  c.lhs = get_or<double>(j, "lhs");
  c.rhs = get_or<double>(j, "rhs");
  c.equality = get_or<bool>(j, "equality");
  c.conditional = get_or<bool>(j, "conditional");
  c.slack = get_or<double>(j, "slack");
  return c;
}

Json witness_json(const Witness& w) {
  Json j;
  j["dim"] = w.dim;
  j["rank"] = w.rank;
  j["index"] = w.index;
  j["variant"] = w.instance.variant;
  j["alpha"] = w.instance.alpha ? Json(*w.instance.alpha) : Json(nullptr);
  j["comparison"] = flags_json(w.comparison);
  j["A"] = matrix_to_json(w.instance.a);
  Json ops = Json::object();
  for (const auto& [name, m] : w.instance.operators) ops[name] = matrix_to_json(m);
  j["operators"] = ops;
  Json vecs = Json::object();
  for (const auto& [name, v] : w.instance.vectors) vecs[name] = vector_to_json(v);
  j["vectors"] = vecs;
  return j;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.dim = get_or<std::size_t>(j, "dim");
  w.rank = get_or<std::size_t>(j, "rank");
  w.index = get_or<std::size_t>(j, "index");
  w.instance.variant = get_or<std::string>(j, "variant");
  if (j.contains("alpha") && !j["alpha"].is_null()) w.instance.alpha = get_or<double>(j, "alpha");
  if (!j.contains("comparison")) parse_error("witness lacks 'comparison'");
  w.comparison = comparison_from_json(j["comparison"]);
  if (!j.contains("A")) parse_error("witness lacks 'A'");
  w.instance.a = matrix_from_json(j["A"]);
  if (j.contains("operators"))
    for (const auto& [name, m] : j["operators"].items()) w.instance.operators[name] = matrix_from_json(m);
  if (j.contains("vectors"))
    for (const auto& [name, v] : j["vectors"].items()) w.instance.vectors[name] = vector_from_json(v);
  return w;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json data = Json::array();
  for (const auto& e : m.entries()) data.push_back({e.real(), e.imag()});
  j["data"] = std::move(data);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) parse_error("matrix must be a JSON object");
  const std::size_t rows = count_field(j, "rows");
  const std::size_t cols = count_field(j, "cols");
  if (!j.contains("data") || !j["data"].is_array()) parse_error("field 'data' must be an array");
  const Json& data = j["data"];
  if (data.size() != rows * cols) {
    parse_error("data has " + std::to_string(data.size()) + " entries, expected rows*cols = " +
                std::to_string(rows * cols));
  }
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (const auto& e : data) entries.push_back(complex_from_json(e));
  return ComplexMatrix(rows, cols, std::move(entries));
}

Json vector_to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& e : v) j.push_back({e.real(), e.imag()});
  return j;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) parse_error("vector must be an array of [re, im] pairs");
  Vector v;
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return v;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
  return matrix_from_json(j);
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
  out << matrix_to_json(m).dump(2) << '\n';
}

Json report_to_json(const SuiteReport& report) {
  const InstanceGenConfig& cfg = report.config;
  Json j;
  j["tool_version"] = report.tool_version;
  Json c;
  c["seed"] = cfg.seed;
  c["dims"] = cfg.dims;
  Json profiles = Json::array();
  for (const auto p : cfg.rank_profiles) profiles.push_back(std::string(to_string(p)));
  c["rank_profiles"] = profiles;
  c["instances_per_check"] = cfg.instances_per_check;
  c["tol_rel"] = cfg.tol_rel;
  c["rtol"] = cfg.rtol;
  c["theta_grid"] = cfg.theta_grid;
  c["only"] = cfg.only;
  j["config"] = c;

  Json summary;
  summary["checks"] = report.results.size();
  summary["violations"] = report.total_violations();
  summary["incomplete"] = report.total_incomplete();
  summary["passed"] = report.passed();
  j["summary"] = summary;

  Json checks = Json::array();
  for (const auto& r : report.results) {
    const CheckSpec& spec = find_check(r.id);
    Json e;
    e["id"] = r.id;
    e["title"] = spec.title;
    e["statement"] = spec.statement;
    e["kind"] = std::string(to_string(spec.kind));
    e["arity"] = std::string(to_string(spec.arity));
    e["seminorms"] = spec.seminorm_ids;
    e["instances"] = r.instances_run;
    e["comparisons"] = r.comparisons;
    e["violations"] = r.violations;
    e["incomplete"] = r.incomplete;
    e["max_violation"] = r.max_violation;
    e["min_slack"] = r.min_slack;
    if (spec.kind == CheckKind::Conditional) {
      e["premise_held"] = r.premise_held;
      e["implication_verified"] = r.implication_verified;
      e["status"] = r.premise_held == 0 ? std::string("premise never held")
                                        : "implication verified " +
                                              std::to_string(r.implication_verified) + " of " +
                                              std::to_string(r.premise_held) + " times";
    }
    if (!r.observations.empty()) {
      Json obs = Json::object();
      for (const auto& [k, v] : r.observations) obs[k] = v;
      e["observations"] = obs;
    }
    e["errors"] = r.errors;
    e["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

SuiteReport report_from_json(const Json& j) {
  if (!j.is_object()) parse_error("report must be a JSON object");
  SuiteReport r;
  r.tool_version = get_or<std::string>(j, "tool_version");
  if (!j.contains("config")) parse_error("report lacks 'config'");
  const Json& c = j["config"];
  InstanceGenConfig cfg;
  cfg.seed = get_or<std::uint64_t>(c, "seed");
  cfg.dims = get_or<std::vector<std::size_t>>(c, "dims");
  cfg.rank_profiles.clear();
  for (const auto& p : get_or<std::vector<std::string>>(c, "rank_profiles")) {
    cfg.rank_profiles.push_back(parse_rank_profile(p));
  }
  cfg.instances_per_check = get_or<std::size_t>(c, "instances_per_check");
  cfg.tol_rel = get_or<double>(c, "tol_rel");
  cfg.rtol = get_or<double>(c, "rtol");
  cfg.theta_grid = get_or<int>(c, "theta_grid");
  cfg.only = get_or<std::vector<std::string>>(c, "only");
  r.config = cfg;

  if (!j.contains("checks") || !j["checks"].is_array()) parse_error("report lacks 'checks'");
  for (const auto& e : j["checks"]) {
    CheckResult res;
    res.id = get_or<std::string>(e, "id");
    res.instances_run = get_or<std::size_t>(e, "instances");
    res.comparisons = get_or<std::size_t>(e, "comparisons");
    res.violations = get_or<std::size_t>(e, "violations");
    res.incomplete = get_or<std::size_t>(e, "incomplete");
    res.max_violation = get_or<double>(e, "max_violation");
    res.min_slack = get_or<double>(e, "min_slack");
    if (e.contains("premise_held")) res.premise_held = get_or<std::size_t>(e, "premise_held");
    if (e.contains("implication_verified")) {
      res.implication_verified = get_or<std::size_t>(e, "implication_verified");
    }
    if (e.contains("observations")) {
      for (const auto& [k, v] : e["observations"].items()) res.observations.emplace_back(k, v.get<double>());
    }
    res.errors = get_or<std::vector<std::string>>(e, "errors");
    if (e.contains("witness") && !e["witness"].is_null()) res.witness = witness_from_json(e["witness"]);
    r.results.push_back(std::move(res));
  }
  return r;
}

std::string dump_report(const SuiteReport& report) { return report_to_json(report).dump(2) + "\n"; }

void write_report_file(const std::filesystem::path& path, const SuiteReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
  out << dump_report(report);
}

SuiteReport read_report_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
  return report_from_json(j);
}

}  // namespace shnr
