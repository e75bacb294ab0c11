#include <algorithm>
#include <iomanip>
#include <sstream>

#include "privlabel/cli.hpp"

namespace privlabel::cli {

namespace {

std::string param_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number() || v.is_boolean()) return v.dump();
  throw ConfigError("suite parameter values must be strings or numbers");
}

std::string cell(const Json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << j.get<double>();
    return s.str();
  }
  return j.dump();
}

}  // namespace

std::vector<SuiteRow> parse_suite(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("suite is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw ConfigError("suite must be an object with a \"rows\" array");
  }
  std::vector<SuiteRow> rows;
  std::size_t index = 0;
  for (const auto& r : doc["rows"]) {
    const std::string where = "suite row " + std::to_string(index++);
    if (!r.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [key, _] : r.items()) {
      if (key != "algo" && key != "gen" && key != "params" && key != "seeds") {
        throw ConfigError(where + ": unknown field '" + key + "'");
      }
    }
    if (!r.contains("algo") || !r["algo"].is_string()) throw ConfigError(where + ": field 'algo' must be a string");
    if (!r.contains("gen") || !r["gen"].is_string()) throw ConfigError(where + ": field 'gen' must be a string");
    SuiteRow row;
    row.algorithm = r["algo"].get<std::string>();
    row.generator = r["gen"].get<std::string>();
    if (r.contains("params")) {
      if (!r["params"].is_object()) throw ConfigError(where + ": field 'params' must be an object");
      for (const auto& [k, v] : r["params"].items()) row.params.emplace_back(k, param_text(v));
    }
    if (r.contains("seeds")) {
      if (!r["seeds"].is_array()) throw ConfigError(where + ": field 'seeds' must be an array");
      for (const auto& s : r["seeds"]) {
        if (!s.is_number_unsigned()) throw ConfigError(where + ": seeds must be non-negative integers");
        row.seeds.push_back(s.get<std::uint64_t>());
      }
    } else {
      row.seeds = {1};
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SuiteRow> default_suite() {
  const std::vector<std::uint64_t> seeds = {1, 2, 3};
  return {
      {"cv-3delta", "random-tree:n=4096,seed=7", {}, seeds},
      {"random-coloring", "gnp:n=1024,p=0.008,dmax=20,seed=7", {{"c", "4"}}, seeds},
      {"delta2-coloring", "gnp:n=1024,p=0.008,dmax=10,seed=7", {}, seeds},
      {"defective-coloring", "gnp:n=1024,p=0.016,dmax=16,seed=7", {{"p", "2"}}, seeds},
      {"arboricity-coloring", "forest-union:n=1024,a=2,seed=7", {{"c", "4"}}, seeds},
      {"network-decomposition", "gnp:n=256,p=0.02,seed=7", {{"c", "2"}}, seeds},
      {"forest-decomposition", "gnp:n=1024,p=0.012,dmax=16,seed=7", {{"mode", "id"}}, seeds},
      {"forest-decomposition", "forest-union:n=1024,a=2,seed=7", {{"mode", "hpartition"}}, seeds},
      {"edge-random", "gnp:n=512,p=0.01,dmax=8,seed=7", {}, seeds},
      {"edge-delta2", "gnp:n=512,p=0.01,dmax=8,seed=7", {}, seeds},
      {"kuhn-edge", "gnp:n=1024,p=0.02,dmax=32,seed=7", {{"i", "2"}}, seeds},
      {"dominating-edge", "gnp:n=512,p=0.03,dmax=16,seed=7", {{"c", "3"}, {"t", "3"}}, seeds},
  };
}

BenchResult run_bench(const std::vector<SuiteRow>& suite) {
  BenchResult result;
  Json rows = Json::array();
  for (const auto& row : suite) {
    Json out;
    out["algorithm"] = row.algorithm;
    out["generator"] = row.generator;
    Json params = Json::object();
    for (const auto& [k, v] : row.params) params[k] = v;
    out["params"] = params;
    out["seeds"] = row.seeds;
    try {
      std::size_t runs = 0, passed = 0, rounds_max = 0, rounds_sum = 0;
      std::optional<std::size_t> domain_min;
      std::optional<double> contingency_max;
      Json table1 = nullptr;
      for (auto seed : row.seeds) {
        RunConfig cfg;
        cfg.algorithm = row.algorithm;
        cfg.generator = row.generator;
        cfg.seed = seed;
        cfg.params = row.params;
        const RunResult r = execute(cfg);
        ++runs;
        if (r.exit_code == kOk) ++passed;
        const std::size_t rounds = r.report["run"]["rounds"].get<std::size_t>();
        rounds_max = std::max(rounds_max, rounds);
        rounds_sum += rounds;
        const Json& m = r.report["metrics"];
        if (!m.is_null()) {
          const auto lo = m["solution_domain_min"].get<std::size_t>();
          domain_min = domain_min ? std::min(*domain_min, lo) : lo;
          if (!m["contingency_factor"].is_null()) {
            const double cf = m["contingency_factor"].get<double>();
            contingency_max = contingency_max ? std::max(*contingency_max, cf) : cf;
          }
        }
        table1 = r.report["table1"];
      }
      out["table1"] = table1;
      out["runs"] = runs;
      out["rounds_max"] = rounds_max;
      out["rounds_mean"] = runs ? static_cast<double>(rounds_sum) / static_cast<double>(runs) : 0.0;
      out["solution_domain_min"] = domain_min ? Json(*domain_min) : Json(nullptr);
      out["contingency_max"] = contingency_max ? Json(*contingency_max) : Json(nullptr);
      out["passed"] = passed;
      out["pass_rate"] = runs ? static_cast<double>(passed) / static_cast<double>(runs) : 1.0;
      out["status"] = passed == runs ? "ok" : "failed";
      if (passed != runs) result.exit_code = kVerdictFailure;
    } catch (const ConfigError& e) {
      out["status"] = "error";
      out["error"] = e.what();
      result.exit_code = kVerdictFailure;
    }
    rows.push_back(out);
  }
  result.summary = {{"tool", "privlabel"}, {"rows", rows}};
  return result;
}

std::string render_bench_table(const Json& summary) {
  const std::vector<std::string> header = {"algorithm", "problem",       "graph", "rounds", "rounds (T1)",
                                           "dom min",   "domain (T1)",   "contingency", "contingency (T1)", "pass"};
  std::vector<std::vector<std::string>> lines = {header};
  for (const auto& r : summary["rows"]) {
    if (r["status"] == "error") {
      lines.push_back({cell(r["algorithm"]), "error: " + cell(r["error"]), "", "", "", "", "", "", "", "-"});
      continue;
    }
    const Json& t = r["table1"];
    auto t1 = [&t](const char* key) { return t.is_null() ? std::string("-") : cell(t[key]); };
    lines.push_back({cell(r["algorithm"]), t1("problem"), t1("graph_type"), cell(r["rounds_max"]), t1("rounds"),
                     cell(r["solution_domain_min"]), t1("solution_domain"), cell(r["contingency_max"]),
                     t1("contingency"), cell(r["passed"]) + "/" + cell(r["runs"])});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& l : lines)
    for (std::size_t i = 0; i < l.size(); ++i) width[i] = std::max(width[i], l[i].size());
  std::string out;
  for (const auto& l : lines) {
    std::string line;
    for (std::size_t i = 0; i < l.size(); ++i) {
      line += l[i];
      if (i + 1 < l.size()) line += std::string(width[i] - l[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string render_bench_csv(const Json& summary) {
  std::string out =
      "algorithm,generator,runs,rounds_max,rounds_mean,solution_domain_min,contingency_max,passed,pass_rate,status\n";
  auto field = [](const Json& j) {
    std::string s = j.is_null() ? "" : (j.is_string() ? j.get<std::string>() : j.dump());
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  for (const auto& r : summary["rows"]) {
    const bool err = r["status"] == "error";
    auto get = [&](const char* key) { return err ? std::string() : field(r[key]); };
    out += field(r["algorithm"]) + "," + field(r["generator"]) + "," + get("runs") + "," + get("rounds_max") + "," +
           get("rounds_mean") + "," + get("solution_domain_min") + "," + get("contingency_max") + "," +
           get("passed") + "," + get("pass_rate") + "," + field(r["status"]) + "\n";
  }
  return out;
}

}  // namespace privlabel::cli
