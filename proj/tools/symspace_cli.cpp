// Batch driver: symspace list | symspace run --experiment <name> [--config <file>] [--out <dir>] [--seed <u64>]
#include <CLI11.hpp>

#include <iostream>

#include "symspace/error.hpp"
#include "symspace/experiments.hpp"

using namespace symspace;

namespace {

// Exit codes: 0 all checks pass, 2 usage or config error, 3 module error,
// 10 + i when experiment i of the registry (in run order) fails its checks.
constexpr int kUsage = 2, kModule = 3, kFailBase = 10;

int experiment_index(const std::string& name) {
  const auto& l = list_experiments();
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i].name == name) return int(i);
  return -1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic analysis on rank-one symmetric spaces: experiments and verdicts"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List experiments");

  auto* run = app.add_subcommand("run", "Run one experiment, or all");
  std::string config_path, experiment, out_dir;
  std::vector<std::string> sets;
  std::uint64_t seed = 0;
  run->add_option("--config", config_path, "key=value config file");
  run->add_option("--experiment,-e", experiment, "experiment name or 'all'")->required();
  run->add_option("--out", out_dir, "output directory (overrides config 'out')");
  auto* seed_opt = run->add_option("--seed", seed, "random seed (overrides config 'seed')");
  run->add_option("--set", sets, "extra key=value overrides");

  CLI11_PARSE(app, argc, argv);

  if (*list) {
    for (const auto& e : list_experiments()) std::cout << e.name << "\t" << e.doc << "\n";
    return 0;
  }

  ExperimentConfig cfg;
  std::vector<std::string> names;
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
    for (const auto& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
      set_config_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (*seed_opt) cfg.seed = seed;
    validate(cfg);
    if (experiment == "all") {
      for (const auto& e : list_experiments()) names.push_back(e.name);
    } else {
      if (experiment_index(experiment) < 0) run_experiment(cfg, experiment);  // throws with the valid names
      names.push_back(experiment);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  int code = 0;
  for (const auto& name : names) {
    try {
      const Report r = run_experiment(cfg, name);
      write_report(r, cfg.out_dir);
      std::cout << (r.pass ? "PASS " : "FAIL ") << name << " (" << r.runtime_ms << " ms)\n";
      if (!r.pass && code == 0) code = kFailBase + experiment_index(name);
    } catch (const ConfigError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      if (code == 0) code = kModule;
    }
  }
  return code;
}
