#pragma once

// Named experiments, their configuration, exact JSON reports, a report cache
// and golden-file comparison.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "voa/lattice.hpp"

namespace voa {

using Json = nlohmann::ordered_json;

struct ExperimentConfig {
  std::string experiment;
  /// Lattice Gram matrix as integer rows.
  IntMat gram;
  /// Cocycle exponents; the default s_ij = G_ij (i > j) when absent.
  std::optional<IntMat> cocycle;
  std::vector<Scalar> central_charges;
  std::vector<Scalar> highest_weights;
  /// Zhu levels n.
  std::vector<int> levels;
  int D = 6;
  int G = 10;
  int max_level = 4;
  int max_weight = 4;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::string out;

  LatticeData lattice() const;
  Json to_json() const;
  /// Unspecified fields take the experiment defaults. InvalidConfig names the
  /// offending field; UnknownExperiment lists the registry.
  static ExperimentConfig from_json(const Json& j);
};

/// Defaults of a registered experiment (UnknownExperiment otherwise).
ExperimentConfig default_config(const std::string& experiment);

struct Verdict {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string experiment;
  Json config;
  Json results = Json::object();
  std::vector<Verdict> verdicts;
  std::int64_t milliseconds = 0;

  bool passed() const;
  void verdict(std::string name, bool ok, std::string detail = "");
  /// Without timing the serialization is a pure function of the config.
  Json to_json(bool include_timing = false) const;
  std::string serialize(bool include_timing = false) const;
  std::string to_text() const;
  /// ParseError on malformed input.
  static Report from_json(const Json& j);
};

struct ExperimentInfo {
  std::string name;
  std::string description;
  /// The result of the source the experiment reproduces.
  std::string anchor;
};

/// Registered experiments in a fixed order.
const std::vector<ExperimentInfo>& list_experiments();

Report run(const ExperimentConfig& config);

struct CacheOptions {
  bool enabled = true;
  /// Defaults to $WORKBENCH_CACHE_DIR; no caching when neither is set.
  std::optional<std::string> directory;
};

/// Reuses a cached report with the same config, otherwise runs and stores it.
Report run_cached(const ExperimentConfig& config, const CacheOptions& cache);

struct ReportDiff {
  bool equal = true;
  /// One line per differing field, as "path: a != b".
  std::vector<std::string> differences;
};

/// Field-by-field comparison ignoring timing.
ReportDiff compare_reports(const Json& a, const Json& b);
/// ParseError when a file is missing or is not a report.
ReportDiff compare_golden(const std::string& report_path, const std::string& golden_path);

Json read_json_file(const std::string& path);

}  // namespace voa
