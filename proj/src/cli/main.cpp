#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "privlabel/cli.hpp"
#include "privlabel/generate.hpp"

namespace privlabel::cli {

namespace {

std::pair<std::string, std::string> split_param(const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("--param expects key=value, got '" + kv + "'");
  return {kv.substr(0, eq), kv.substr(eq + 1)};
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Private-labeling distributed algorithms on a simulated LOCAL network", "privlabel"};
  app.require_subcommand(1);

  RunConfig run_cfg;
  std::vector<std::string> raw_params;
  std::string run_out, run_format = "json";
  auto* run = app.add_subcommand("run", "Run one algorithm, verify it and write a report");
  run->add_option("--algo", run_cfg.algorithm, "Algorithm tag")->required();
  auto* graph_opt = run->add_option("--graph", run_cfg.graph_file, "Edge-list file");
  auto* gen_opt = run->add_option("--gen", run_cfg.generator, "Generator spec, e.g. gnp:n=1024,p=0.008,seed=7");
  graph_opt->excludes(gen_opt);
  run->add_option("--seed", run_cfg.seed, "Master seed");
  run->add_option("--param", raw_params, "Algorithm parameter key=value (repeatable)");
  run->add_option("--out", run_out, "Report path (default stdout)");
  run->add_option("--format", run_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  run->add_flag("--emit-domains", run_cfg.emit_domains, "Include every domain in the report");
  run->add_flag("--serial", run_cfg.serial, "Use the serial reference engine");

  std::string suite_path, bench_out, bench_format = "table";
  auto* bench = app.add_subcommand("bench", "Run a suite and print a Table-1 shaped summary");
  bench->add_option("suite", suite_path, "Suite JSON (default: built-in suite)");
  bench->add_option("--out", bench_out, "Summary path (default stdout)");
  bench->add_option("--format", bench_format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));

  std::string gen_spec, gen_out;
  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("spec", gen_spec, "Generator spec")->required();
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  auto* tags = app.add_subcommand("algorithms", "List algorithm tags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*run) {
      for (const auto& kv : raw_params) run_cfg.params.push_back(split_param(kv));
      const RunResult r = execute(run_cfg);
      emit(run_format == "csv" ? render_csv({r.report}) : render_json(r.report), run_out, out);
      return r.exit_code;
    }
    if (*bench) {
      const auto suite = suite_path.empty() ? default_suite() : parse_suite(read_file(suite_path));
      const BenchResult r = run_bench(suite);
      std::string text;
      if (bench_format == "json") text = r.summary.dump(2) + "\n";
      else if (bench_format == "csv") text = render_bench_csv(r.summary);
      else text = render_bench_table(r.summary);
      emit(text, bench_out, out);
      return r.exit_code;
    }
    if (*gen) {
      GeneratedGraph g;
      try {
        g = generate(parse_generator_spec(gen_spec));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      emit(to_edge_list(g.graph), gen_out, out);
      return kOk;
    }
    if (*tags) {
      for (const auto& t : algorithm_tags()) out << t << "\n";
      return kOk;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace privlabel::cli
