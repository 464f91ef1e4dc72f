#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symspace/csv.hpp"

namespace symspace {

// Plain key=value configuration; '#' starts a comment. Unset grid keys keep each experiment's defaults.
struct ExperimentConfig {
  std::string space = "hyperbolic(2)";
  std::optional<double> nu_max, nu_width, t_max, t_width;
  std::optional<int> nu_nodes, t_nodes;  // Gauss nodes per panel
  int modes = 4;
  std::vector<double> times;             // empty: experiment default
  std::optional<double> tolerance;       // overrides the experiment tolerance
  std::string out_dir = "out";
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);
// Applies one key=value pair; throws ConfigError on unknown keys or malformed values.
void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);
void validate(const ExperimentConfig& cfg);

struct Report {
  std::string experiment, space;
  std::map<std::string, double> metrics;
  double tolerance = 0.0;
  bool pass = false;
  long runtime_ms = 0;
  Table table;
};

struct ExperimentInfo {
  std::string name, doc;
};

const std::vector<ExperimentInfo>& list_experiments();
// Throws ConfigError naming the valid experiments when `name` is unknown.
Report run_experiment(const ExperimentConfig& cfg, const std::string& name);

// {experiment, space, metrics, tolerance, pass, runtime_ms}; runtime is omitted when requested.
std::string summary_json(const Report& r, bool with_runtime = true);
// Writes <out_dir>/<experiment>.csv and <out_dir>/<experiment>.json.
void write_report(const Report& r, const std::string& out_dir);

}  // namespace symspace
