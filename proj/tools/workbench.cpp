#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "voa/workbench.hpp"

using namespace voa;

namespace {

constexpr int kAllPass = 0;
constexpr int kVerdictFailure = 1;
constexpr int kInfrastructure = 2;

int run_command(const std::string& name, const std::string& config_path, const std::string& out_path, bool no_cache,
                bool timing) {
  ExperimentConfig cfg = default_config(name);
  if (!config_path.empty()) {
    Json j = read_json_file(config_path);
    if (!j.is_object()) throw Error(ErrorKind::InvalidConfig, "config must be a JSON object");
    if (j.contains("experiment") && j["experiment"] != name)
      throw Error(ErrorKind::InvalidConfig, "field 'experiment': config names " + j["experiment"].dump() +
                                                " but the command runs '" + name + "'");
    j["experiment"] = name;
    cfg = ExperimentConfig::from_json(j);
  }
  if (!out_path.empty()) cfg.out = out_path;

  CacheOptions cache;
  cache.enabled = !no_cache;
  const Report report = run_cached(cfg, cache);
  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out);
    if (!out) throw Error(ErrorKind::InvalidConfig, "field 'out': cannot write '" + cfg.out + "'");
    out << report.serialize(timing);
  }
  std::cout << report.to_text();
  return report.passed() ? kAllPass : kVerdictFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic workbench for vertex operator algebras"};
  app.require_subcommand(1);

  std::string name, config_path, out_path;
  bool no_cache = false, timing = false;
  auto* run = app.add_subcommand("run", "Run a registered experiment");
  run->add_option("name", name, "Experiment name")->required();
  run->add_option("--config", config_path, "JSON config; unspecified fields take the experiment defaults");
  run->add_option("--out", out_path, "Write the JSON report here");
  run->add_flag("--no-cache", no_cache, "Ignore WORKBENCH_CACHE_DIR");
  run->add_flag("--timing", timing, "Include the timing field in the written report");

  auto* list = app.add_subcommand("list", "List registered experiments");

  std::string left, right;
  auto* diff = app.add_subcommand("diff", "Compare two reports field by field, ignoring timing");
  diff->add_option("a", left, "Report")->required();
  diff->add_option("b", right, "Golden report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kAllPass : kInfrastructure;
  }

  try {
    if (*run) return run_command(name, config_path, out_path, no_cache, timing);
    if (*list) {
      for (const auto& e : list_experiments())
        std::cout << e.name << "\n  " << e.description << "\n  reproduces: " << e.anchor << "\n";
      return kAllPass;
    }
    if (*diff) {
      const ReportDiff d = compare_golden(left, right);
      if (d.equal) {
        std::cout << "reports agree\n";
        return kAllPass;
      }
      for (const auto& line : d.differences) std::cout << line << "\n";
      return kVerdictFailure;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInfrastructure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfrastructure;
  }
  return kInfrastructure;
}
