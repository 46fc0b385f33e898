#pragma once

// Scenario configuration, read from a single JSON document. Every key has a
// default; unknown keys are rejected with their dotted path. See
// configs/defaults.json for the full tree (format version 1).

#include <cstdint>
#include <string>
#include <vector>

#include "oscillock/evolution.hpp"
#include "oscillock/systems.hpp"

namespace oscillock {

inline constexpr int kConfigVersion = 1;
inline constexpr const char* kToolVersion = "oscillock 1.0.0";

struct SystemConfig {
  SystemKind kind = SystemKind::harmonic;
  double omega = 1.0;
  double mass = 1.0;
  Complex alpha{2.0, 0.0};
  std::size_t cutoff = 64;
  std::size_t n_max = 6;
  std::vector<double> energies;     // custom systems
  std::vector<Complex> amplitudes;  // custom and hydrogen systems
};

struct ClockConfig {
  double lambda = 0.1;
  double hbar = 1.0;
};

enum class SamplingPolicy { automatic, uniform };

struct TauConfig {
  double min = 0.0;
  double max = 40.0;
  SamplingPolicy policy = SamplingPolicy::automatic;
  std::size_t samples = 2001;  // used by the uniform policy
};

struct PhasesConfig {
  std::vector<std::size_t> states{0};
};

struct DensityConfig {
  double x_min = -6.0;
  double x_max = 6.0;
  std::size_t x_points = 121;
};

struct SweepConfig {
  double lambda_min = 1.0;
  double lambda_max = 10000.0;
  std::size_t points = 13;
  std::size_t min_periods = 30;
  std::size_t target_periods = 120;
  double samples_per_period = 256.0;
  double time_budget_seconds = 600.0;
  std::string observable = "x";
};

struct BoundConfig {
  double sigma = 1e-19;
  double system_period = 2e-15;
};

struct OutputConfig {
  std::string dir = "out";
};

struct ScenarioConfig {
  int version = kConfigVersion;
  SystemConfig system;
  ClockConfig clock;
  PhaseLaw mode = PhaseLaw::oscillating;
  TauConfig tau;
  PhasesConfig phases;
  DensityConfig density;
  SweepConfig sweep;
  BoundConfig bound;
  OutputConfig output;
  std::uint64_t seed = 0;  // reserved; the pipeline is deterministic
};

// Parses and validates. Throws ConfigError naming the offending field (and
// the line/column for syntax errors).
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

// Range checks shared by parsing and command-line overrides.
void validate_config(const ScenarioConfig& config);

// Canonical JSON (sorted keys, every field present).
std::string canonical_json(const ScenarioConfig& config);

// FNV-1a 64-bit hash of the canonical JSON, as 16 hex digits.
std::string config_hash(const ScenarioConfig& config);

}  // namespace oscillock
