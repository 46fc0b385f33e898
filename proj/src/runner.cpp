#include "oscillock/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "oscillock/csv.hpp"
#include "oscillock/errors.hpp"
#include "oscillock/evolution.hpp"
#include "oscillock/periods.hpp"
#include "oscillock/phase.hpp"

namespace oscillock {
namespace {

constexpr std::size_t kMaxAutoSamples = 200000;
constexpr double kPopulated = 1e-6;

std::string header_comment(const ScenarioConfig& config, const std::string& command) {
  return std::string(kToolVersion) + " command=" + command + " config_hash=" + config_hash(config) +
         " config=" + canonical_json(config);
}

std::string output_path(const ScenarioConfig& config, const std::string& name) {
  std::filesystem::create_directories(config.output.dir);
  return (std::filesystem::path(config.output.dir) / name).string();
}

EvolutionRequest make_request(const ScenarioConfig& config, const Scenario& scenario,
                              std::vector<double> grid) {
  return EvolutionRequest{scenario.spectrum, scenario.state,
                          ClockParams(config.clock.lambda, config.clock.hbar), std::move(grid),
                          config.mode};
}

std::vector<Complex> hydrogen_amplitudes(const SystemConfig& s) {
  std::vector<Complex> a = s.amplitudes;
  if (a.empty()) a = {1.0, 1.0, 1.0};
  a.resize(s.n_max, Complex{});
  return a;
}

}  // namespace

Scenario build_scenario(const ScenarioConfig& config) {
  const auto& s = config.system;
  try {
    switch (s.kind) {
      case SystemKind::harmonic: {
        auto spectrum = harmonic_spectrum(s.cutoff, s.omega, config.clock.hbar, s.mass);
        auto state = coherent_state({s.alpha, s.cutoff});
        auto obs = harmonic_observables(s.cutoff, s.omega, config.clock.hbar, s.mass);
        return Scenario{std::move(spectrum), std::move(state), std::move(obs), std::nullopt};
      }
      case SystemKind::hydrogen: {
        auto h = hydrogen_system(s.n_max);
        auto state = StateVector::normalized(hydrogen_amplitudes(s));
        auto spectrum = h.spectrum;
        return Scenario{std::move(spectrum), std::move(state), std::nullopt, std::move(h)};
      }
      case SystemKind::custom: {
        auto custom = custom_superposition(s.energies, s.amplitudes);
        return Scenario{std::move(custom.spectrum), std::move(custom.state), std::nullopt, std::nullopt};
      }
    }
  } catch (const DomainError& e) {
    throw ConfigError("system", e.what());
  }
  throw ConfigError("system.kind", "unsupported system");
}

std::vector<double> make_tau_grid(const ScenarioConfig& config, const Spectrum& spectrum,
                                  const StateVector& state) {
  const double span = config.tau.max - config.tau.min;
  std::size_t intervals = 0;
  if (config.tau.policy == SamplingPolicy::uniform) {
    intervals = config.tau.samples - 1;
  } else {
    const double hbar = config.clock.hbar;
    double period = reference_system_period(spectrum, state, hbar);
    double min_energy = 0.0;
    for (std::size_t k = 0; k < state.size(); ++k) {
      if (std::norm(state.coefficients()[k]) <= kPopulated) continue;
      const double e = std::fabs(spectrum.energies()[k]);
      if (min_energy == 0.0 || e < min_energy) min_energy = e;
    }
    if (period == 0.0) period = 2.0 * std::numbers::pi * hbar / min_energy;
    const auto per_period = static_cast<std::size_t>(std::ceil(256.0 * span / period));
    const double cycle = 4.0 * min_energy / config.clock.lambda;
    const double per_cycle = std::ceil(40.0 * span / cycle);
    intervals = per_period;
    if (per_cycle <= static_cast<double>(kMaxAutoSamples)) {
      intervals = std::max(intervals, static_cast<std::size_t>(per_cycle));
    }
    intervals = std::max<std::size_t>(intervals, 1);
  }
  std::vector<double> grid(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    grid[i] = config.tau.min + span * static_cast<double>(i) / static_cast<double>(intervals);
  }
  return grid;
}

RunResult run_evolve(const ScenarioConfig& config) {
  const auto scenario = build_scenario(config);
  auto request = make_request(config, scenario, make_tau_grid(config, scenario.spectrum, scenario.state));
  const std::string comment = header_comment(config, "evolve");
  RunResult result;
  const double floor = std::pow(config.clock.hbar / 2.0, 2) - 1e-9;

  if (scenario.harmonic) {
    const auto path = output_path(config, "trajectory.csv");
    const auto points = phase_space_trajectory(request, *scenario.harmonic);
    CsvWriter csv(path, comment, {"tau", "mean_x", "mean_p", "var_x", "var_p", "covar_xp", "norm"});
    double worst = std::numeric_limits<double>::infinity();
    double max_var_x = 0.0;
    for (const auto& p : points) {
      if (std::fabs(p.norm - 1.0) > StateVector::kNormTolerance) {
        throw NumericalError("norm drifted to " + format_real(p.norm) + " at tau = " + format_real(p.tau));
      }
      const double u = uncertainty_product(p);
      if (u < floor) {
        throw NumericalError("uncertainty relation violated at tau = " + format_real(p.tau) +
                             " (product " + format_real(u) + "); increase system.cutoff");
      }
      worst = std::min(worst, u);
      max_var_x = std::max(max_var_x, p.var_x);
      csv.row({p.tau, p.mean_x, p.mean_p, p.var_x, p.var_p, p.covar_xp, p.norm});
    }
    csv.close();
    result.files.push_back(path);
    std::ostringstream msg;
    msg << points.size() << " samples; max var_x " << max_var_x << "; min uncertainty product " << worst;
    result.summary = msg.str();
  } else if (scenario.hydrogen) {
    const auto path = output_path(config, "radius.csv");
    const auto series = observable_series(request, scenario.hydrogen->r, scenario.hydrogen->r2);
    CsvWriter csv(path, comment, {"tau", "mean_r", "var_r", "std_r", "norm"});
    for (const auto& s : series) {
      const double norm = evolve_state(request, s.tau).norm_squared();
      csv.row({s.tau, s.value, s.variance, std::sqrt(std::max(0.0, s.variance)), norm});
    }
    csv.close();
    result.files.push_back(path);
    result.summary = std::to_string(series.size()) + " samples of the orbital radius";
  } else {
    const auto path = output_path(config, "survival.csv");
    CsvWriter csv(path, comment, {"tau", "survival_probability", "norm"});
    const auto& c0 = scenario.state.coefficients();
    for (double tau : request.tau_grid) {
      const auto state = evolve_state(request, tau);
      Complex overlap{};
      for (std::size_t k = 0; k < c0.size(); ++k) overlap += std::conj(c0[k]) * state.coefficients()[k];
      csv.row({tau, std::norm(overlap), state.norm_squared()});
    }
    csv.close();
    result.files.push_back(path);
    result.summary = std::to_string(request.tau_grid.size()) + " samples of the survival probability";
  }
  return result;
}

RunResult run_phases(const ScenarioConfig& config) {
  const auto scenario = build_scenario(config);
  const auto grid = make_tau_grid(config, scenario.spectrum, scenario.state);
  const ClockParams clock(config.clock.lambda, config.clock.hbar);
  for (std::size_t k : config.phases.states) {
    if (k >= scenario.spectrum.size()) {
      throw ConfigError("phases.states", "eigenstate index " + std::to_string(k) + " is outside the spectrum");
    }
  }
  const auto path = output_path(config, "phases.csv");
  CsvWriter csv(path, header_comment(config, "phases"),
                {"tau", "state", "energy", "phase", "small_lambda_phase", "large_lambda_phase",
                 "cycle_index", "direction"});
  for (std::size_t k : config.phases.states) {
    const double energy = scenario.spectrum.energies()[k];
    const double phi_t = turning_amplitude(energy, clock).phi_t;
    for (double tau : grid) {
      const auto phase = accumulated_phase(tau, energy, clock);
      const auto sample = phi_of_tau(tau, phi_t);
      csv.row({tau, static_cast<long long>(k), energy, static_cast<double>(phase.total_phase()),
               small_lambda_phase(tau, energy, clock), large_lambda_phase(tau, energy, clock),
               static_cast<long long>(sample.n), static_cast<long long>(sample.direction)});
    }
  }
  csv.close();
  return {{path}, std::to_string(grid.size() * config.phases.states.size()) + " phase samples"};
}

RunResult run_density(const ScenarioConfig& config) {
  if (config.system.kind != SystemKind::harmonic) {
    throw ConfigError("system.kind", "density grids are only available for harmonic systems");
  }
  const auto scenario = build_scenario(config);
  const auto request =
      make_request(config, scenario, make_tau_grid(config, scenario.spectrum, scenario.state));
  std::vector<double> xs(config.density.x_points);
  const double dx = (config.density.x_max - config.density.x_min) /
                    static_cast<double>(config.density.x_points - 1);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = config.density.x_min + dx * static_cast<double>(i);

  const auto path = output_path(config, "density.csv");
  CsvWriter csv(path, header_comment(config, "density"), {"tau", "x", "density"});
  for (double tau : request.tau_grid) {
    const auto psi = wavefunction_on_grid(request, tau, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) csv.row({tau, xs[i], std::norm(psi[i])});
  }
  csv.close();
  return {{path}, std::to_string(request.tau_grid.size()) + " x " + std::to_string(xs.size()) + " density grid"};
}

RunResult run_sigma_sweep(const ScenarioConfig& config) {
  if (config.system.kind != SystemKind::harmonic) {
    throw ConfigError("system.kind", "the sigma sweep needs a harmonic system (zero crossings of <x>)");
  }
  const auto scenario = build_scenario(config);
  const auto request = make_request(config, scenario, {});
  const auto& observable = config.sweep.observable == "p" ? scenario.harmonic->p : scenario.harmonic->x;
  std::vector<double> lambdas(config.sweep.points);
  const double ratio = config.sweep.lambda_max / config.sweep.lambda_min;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    lambdas[i] = config.sweep.lambda_min *
                 std::pow(ratio, static_cast<double>(i) / static_cast<double>(lambdas.size() - 1));
  }
  SweepOptions options;
  options.min_periods = config.sweep.min_periods;
  options.target_periods = config.sweep.target_periods;
  options.samples_per_period = config.sweep.samples_per_period;
  options.time_budget_seconds = config.sweep.time_budget_seconds;
  const auto cmp = sigma_vs_lambda(request, observable, lambdas, options);

  const auto path = output_path(config, "sigma_sweep.csv");
  CsvWriter csv(path, header_comment(config, "sigma-sweep"),
                {"lambda", "sigma_numeric", "sigma_analytic", "ratio", "n_periods", "mean_period",
                 "resolved", "numeric_slope", "analytic_slope"});
  for (const auto& p : cmp.points) {
    csv.row({p.lambda, p.numeric_sigma, p.analytic_sigma,
             p.resolved ? p.numeric_sigma / p.analytic_sigma : std::nan(""),
             static_cast<long long>(p.n_periods), p.mean_period, static_cast<long long>(p.resolved),
             cmp.numeric_slope, cmp.analytic_slope});
  }
  csv.close();
  std::ostringstream msg;
  msg << cmp.lambda_values.size() << "/" << lambdas.size() << " lambdas resolved; numeric slope "
      << cmp.numeric_slope << ", analytic slope " << cmp.analytic_slope;
  return {{path}, msg.str()};
}

RunResult run_bound(const ScenarioConfig& config) {
  const double bound = clock_period_bound(config.bound.sigma, config.bound.system_period);
  const auto path = output_path(config, "bound.csv");
  CsvWriter csv(path, header_comment(config, "bound"),
                {"sigma", "system_period", "coefficient", "clock_period_bound"});
  csv.row({config.bound.sigma, config.bound.system_period, clock_period_coefficient(), bound});
  csv.close();
  std::ostringstream msg;
  msg.precision(6);
  msg << "T_C <= " << clock_period_coefficient() << " * " << config.bound.sigma << " * "
      << config.bound.system_period << " = " << bound;
  return {{path}, msg.str()};
}

}  // namespace oscillock
