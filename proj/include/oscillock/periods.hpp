#pragma once

// System-period statistics from zero crossings of an expectation value, the
// quarter-cycle dephasing estimate, and the resulting clock-period bound.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "oscillock/clock.hpp"
#include "oscillock/evolution.hpp"

namespace oscillock {

struct SamplePoint {
  double tau;
  double value;
};

struct PeriodEnsemble {
  std::vector<double> periods;
  double mean_period = 0.0;
  double std_dev = 0.0;
  double relative_std_dev = 0.0;
};

struct SigmaPoint {
  double lambda = 0.0;
  double numeric_sigma = 0.0;
  double analytic_sigma = 0.0;
  std::size_t n_periods = 0;
  double mean_period = 0.0;
  double tau_covered = 0.0;
  bool resolved = false;
  std::string note;
};

struct SigmaComparison {
  std::vector<double> lambda_values;
  std::vector<double> numeric_sigma;
  std::vector<double> analytic_sigma;
  std::vector<std::size_t> n_periods;
  double rescale = 0.0;  // 2/pi applied to the analytic values
  double numeric_slope = 0.0;
  double analytic_slope = 0.0;
  std::vector<SigmaPoint> points;  // every requested lambda, resolved or not
};

struct SweepOptions {
  // Required coverage in system periods (each period spans two crossings).
  std::size_t min_periods = 30;
  // Runs stop once this many system periods are covered.
  std::size_t target_periods = 120;
  double samples_per_period = 256.0;
  // Hard limit on tau per run; 0 selects 8 x target_periods reference periods.
  double max_tau = 0.0;
  // Wall-clock budget per lambda in seconds; the achieved count is reported.
  double time_budget_seconds = 600.0;
};

using RealFunction = std::function<double(double)>;

// Sign changes between neighbouring samples, located by linear interpolation
// and, when `refine` is given, by bisection on refine(tau) down to
// 1e-10 x the mean sample spacing. Samples that are exactly zero count once.
std::vector<double> find_zero_crossings(std::span<const SamplePoint> series,
                                        const RealFunction& refine = {});

// Periods are twice the spacing of successive crossings; the spread uses the
// unbiased (n - 1) sample standard deviation. Needs at least 3 crossings.
PeriodEnsemble period_ensemble(std::span<const double> crossings);

// Twice the least-squares slope of crossing time against crossing index.
double fitted_period(std::span<const double> crossings);

// sqrt(E^4 (21 pi^2 - 1024/5)) / (24 lambda hbar) with E^4 = energy_sq^2,
// optionally times 2/pi.
double analytic_sigma(double energy_sq, const ClockParams& clock, bool rescale = false);

// <H^2> of a state over its spectrum.
double mean_energy_squared(const Spectrum& spectrum, const StateVector& state);

// Crossings of <observable>(tau) on [0, tau_end] sampled every `dt`, refined
// against the closed-form evolution. Stops early after `max_crossings`.
std::vector<double> observable_crossings(const EvolutionRequest& request,
                                         const ObservableMatrix& observable, double tau_end,
                                         double dt, std::size_t max_crossings);

// Shortest oscillation period 2 pi hbar / dE among populated eigenstate pairs
// (|c_k|^2 > 1e-6); 0 when only one eigenstate is populated.
double reference_system_period(const Spectrum& spectrum, const StateVector& state, double hbar);

SigmaPoint measure_sigma(const EvolutionRequest& request, const ObservableMatrix& observable,
                         const SweepOptions& options);

// Runs `measure_sigma` for every lambda in the grid (the template's clock
// lambda is replaced, hbar kept). Unresolved runs are reported with a warning
// and left out of the slope fit.
SigmaComparison sigma_vs_lambda(const EvolutionRequest& request_template,
                                const ObservableMatrix& observable,
                                std::span<const double> lambda_grid,
                                const SweepOptions& options = {});

// Least-squares slope of log y against log x.
double log_log_slope(std::span<const double> x, std::span<const double> y);

// 48 / (pi sqrt(21 pi^2 - 1024/5)).
double clock_period_coefficient();

double clock_period_bound(double sigma, double system_period);

}  // namespace oscillock
