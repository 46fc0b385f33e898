#pragma once

// Closed-form evolution of energy-basis states: every coefficient c_k picks up
// the phase of its own eigenvalue, with its own turning amplitude and cycle
// count, so a superposition spreads over several clock cycles at once.

#include <string_view>
#include <vector>

#include "oscillock/clock.hpp"
#include "oscillock/systems.hpp"

namespace oscillock {

enum class PhaseLaw { oscillating, small_lambda_reference, large_lambda_reference };

const char* to_string(PhaseLaw law);
// Throws DomainError for unknown names.
PhaseLaw phase_law_from_string(std::string_view name);

struct EvolutionRequest {
  Spectrum spectrum;
  StateVector initial_state;
  ClockParams clock;
  std::vector<double> tau_grid;
  PhaseLaw mode = PhaseLaw::oscillating;
};

// Throws DomainError if the state does not match the spectrum or the grid is
// not strictly increasing.
void validate(const EvolutionRequest& request);

struct SeriesPoint {
  double tau;
  double value;
  double variance;
};

struct TrajectoryPoint {
  double tau;
  double mean_x;
  double mean_p;
  double var_x;
  double var_p;
  double covar_xp;
  double norm;
};

// Phase of eigenvalue `energy` at tau under the given law, reduced to (-pi, pi].
double eigen_phase(PhaseLaw law, double tau, double energy, const ClockParams& clock);

StateVector evolve_state(const EvolutionRequest& request, double tau);

// Real part of <c|O|c>. Throws NumericalError when the imaginary residue
// exceeds 1e-8.
double real_expectation(const ObservableMatrix& observable, std::span<const Complex> state);

double expectation_at(const EvolutionRequest& request, const ObservableMatrix& observable,
                      double tau);

// value = <O>, variance = <O^2> - <O>^2 with `squared` holding the matrix of O^2.
std::vector<SeriesPoint> observable_series(const EvolutionRequest& request,
                                           const ObservableMatrix& observable,
                                           const ObservableMatrix& squared);

// psi(x, tau) = sum_k c_k(tau) u_k(x) with normalized Hermite functions.
// Throws UnsupportedSystemError for non-harmonic spectra.
std::vector<Complex> wavefunction_on_grid(const EvolutionRequest& request, double tau,
                                          std::span<const double> x_grid);

std::vector<TrajectoryPoint> phase_space_trajectory(const EvolutionRequest& request,
                                                    const HarmonicObservables& observables);

// var_x var_p - covar_xp^2: bounded below by (hbar/2)^2.
double uncertainty_product(const TrajectoryPoint& point);

}  // namespace oscillock
