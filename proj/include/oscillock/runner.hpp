#pragma once

// Scenario runners behind the command-line subcommands. Each writes its CSV
// artifacts into config.output.dir and returns the paths written.

#include <optional>
#include <string>
#include <vector>

#include "oscillock/config.hpp"
#include "oscillock/systems.hpp"

namespace oscillock {

struct Scenario {
  Spectrum spectrum;
  StateVector state;
  std::optional<HarmonicObservables> harmonic;
  std::optional<HydrogenSystem> hydrogen;
};

struct RunResult {
  std::vector<std::string> files;
  std::string summary;
};

// Builds the system and its initial state. Domain problems in the system
// section are reported as ConfigError("system...").
Scenario build_scenario(const ScenarioConfig& config);

// Uniform policy: config.tau.samples points. Automatic policy: at least 256
// samples per system period, raised to 40 per shortest populated clock cycle
// when that stays below 200000 samples.
std::vector<double> make_tau_grid(const ScenarioConfig& config, const Spectrum& spectrum,
                                  const StateVector& state);

RunResult run_evolve(const ScenarioConfig& config);
RunResult run_phases(const ScenarioConfig& config);
RunResult run_density(const ScenarioConfig& config);
RunResult run_sigma_sweep(const ScenarioConfig& config);
RunResult run_bound(const ScenarioConfig& config);

}  // namespace oscillock
