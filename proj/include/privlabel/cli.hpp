#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace privlabel::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kVerdictFailure = 1, kConfigError = 2, kIncomplete = 3 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string algorithm;
  /// Exactly one of graph_file / generator is set.
  std::string graph_file;
  std::string generator;
  std::uint64_t seed = 0;
  /// key=value pairs in command-line order.
  std::vector<std::pair<std::string, std::string>> params;
  bool emit_domains = false;
  /// Serial reference engine instead of the OpenMP one; reports are identical.
  bool serial = false;
};

struct RunResult {
  Json report;
  int exit_code = kOk;
};

/// Every algorithm tag `run` accepts, in a fixed order.
const std::vector<std::string>& algorithm_tags();

/// Loads the graph, runs the algorithm, runs its checkers and assembles the
/// report. Throws ConfigError for bad configurations (unknown algorithm or
/// parameter, malformed values, missing graph, violated preconditions).
RunResult execute(const RunConfig& config);

std::string render_json(const Json& report);
/// Header plus one row per report.
std::string render_csv(const std::vector<Json>& reports);

struct SuiteRow {
  std::string algorithm;
  std::string generator;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::uint64_t> seeds;
};

/// Suite file: {"rows": [{"algo": ..., "gen": ..., "params": {...}, "seeds": [...]}]}.
std::vector<SuiteRow> parse_suite(std::string_view text);
/// One row per Table-1 algorithm.
std::vector<SuiteRow> default_suite();

struct BenchResult {
  Json summary;
  int exit_code = kOk;
};

/// Runs every (row, seed). A row whose configuration is rejected is marked
/// with its error and the others still run.
BenchResult run_bench(const std::vector<SuiteRow>& suite);
std::string render_bench_table(const Json& summary);
std::string render_bench_csv(const Json& summary);

/// Entry point of the `privlabel` executable.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace privlabel::cli
