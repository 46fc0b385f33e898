// Command-line front end: one subcommand per artifact.
//
//   oscillock evolve      --config scenario.json [--lambda L] [--tau-max T] [--out DIR]
//   oscillock phases      ...
//   oscillock density     ...
//   oscillock sigma-sweep ...
//   oscillock bound       [--sigma S] [--system-period T]
//
// Exit codes: 0 success, 2 configuration error, 3 numerical error.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "oscillock/config.hpp"
#include "oscillock/errors.hpp"
#include "oscillock/runner.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Overrides {
  std::string config_path;
  std::optional<double> lambda;
  std::optional<double> tau_max;
  std::optional<std::string> out_dir;
  std::optional<double> sigma;
  std::optional<double> system_period;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "Scenario config file (JSON)");
  cmd->add_option("--lambda", o.lambda, "Override clock.lambda");
  cmd->add_option("--tau-max", o.tau_max, "Override tau.max");
  cmd->add_option("--out", o.out_dir, "Override output.dir");
}

oscillock::ScenarioConfig resolve(const Overrides& o) {
  auto config = o.config_path.empty() ? oscillock::ScenarioConfig{} : oscillock::load_config(o.config_path);
  if (o.lambda) config.clock.lambda = *o.lambda;
  if (o.tau_max) config.tau.max = *o.tau_max;
  if (o.out_dir) config.output.dir = *o.out_dir;
  if (o.sigma) config.bound.sigma = *o.sigma;
  if (o.system_period) config.bound.system_period = *o.system_period;
  oscillock::validate_config(config);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relational evolution of bound-state systems against an oscillating clock"};
  app.require_subcommand(1);
  bool print_defaults = false;
  app.add_flag("--print-defaults", print_defaults, "Print the default configuration and exit");
  app.set_version_flag("--version", oscillock::kToolVersion);

  Overrides o;
  auto* evolve = app.add_subcommand("evolve", "Expectation values and second moments over tau");
  auto* phases = app.add_subcommand("phases", "Accumulated eigenstate phases with limit references");
  auto* density = app.add_subcommand("density", "Position density |psi(x, tau)|^2 on a grid");
  auto* sweep = app.add_subcommand("sigma-sweep", "Relative period deviation against lambda");
  auto* bound = app.add_subcommand("bound", "Fundamental clock period bound from a measured deviation");
  for (auto* cmd : {evolve, phases, density, sweep, bound}) add_common(cmd, o);
  bound->add_option("--sigma", o.sigma, "Relative standard deviation of the system period");
  bound->add_option("--system-period", o.system_period, "System period T_S (any time unit)");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  if (print_defaults) {
    std::cout << oscillock::canonical_json(oscillock::ScenarioConfig{}) << '\n';
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return kExitConfig;
  }

  try {
    const auto config = resolve(o);
    oscillock::RunResult result;
    if (evolve->parsed()) result = oscillock::run_evolve(config);
    if (phases->parsed()) result = oscillock::run_phases(config);
    if (density->parsed()) result = oscillock::run_density(config);
    if (sweep->parsed()) result = oscillock::run_sigma_sweep(config);
    if (bound->parsed()) result = oscillock::run_bound(config);
    std::cout << result.summary << '\n';
    for (const auto& f : result.files) std::cout << "wrote " << f << '\n';
    return 0;
  } catch (const oscillock::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
