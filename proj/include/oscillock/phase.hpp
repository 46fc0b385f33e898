#pragma once

// Per-eigenstate phases under the oscillating clock.
//
// Within one half-cycle the energy eigenstate E picks up the phase
//
//   Theta(phi) = -(1 / 2 hbar) (phi sqrt(E^2 - lambda^2 phi^2)
//                               + (E^2 / lambda) asin(lambda phi / |E|)),
//
// entering with a plus sign on forward branches and a minus sign on backward
// branches, so that every half-cycle adds Theta(phi_t) - Theta(-phi_t)
// = -pi E^2 / (2 lambda hbar). Concatenating the branches gives a continuous
// phase in tau. Phases are referenced to tau = 0 (phase(0) = 0).
//
// Negative energies (hydrogen) enter through |E| and E^2 only.

#include <cstdint>

#include "oscillock/clock.hpp"

namespace oscillock {

struct EigenPhase {
  double energy;
  double tau;
  // Exact decomposition: total = half_cycles * half_cycle_increment + branch_phase.
  std::int64_t half_cycles;
  long double half_cycle_increment;
  long double branch_phase;

  long double total_phase() const noexcept;
  // total_phase reduced to (-pi, pi].
  double wrapped_phase() const noexcept;
};

// a.total_phase() - b.total_phase() evaluated without forming the (possibly
// huge) totals. Both phases must belong to the same energy and clock.
long double phase_difference(const EigenPhase& a, const EigenPhase& b);

// Throws DomainError when |phi| exceeds the turning amplitude |E|/lambda by
// more than a relative 1e-12 (the clock must be unwound first) or E == 0.
double theta(double phi, double energy, const ClockParams& clock);

// -pi E^2 / (2 lambda hbar).
double half_cycle_increment(double energy, const ClockParams& clock);

EigenPhase accumulated_phase(double tau, double energy, const ClockParams& clock);

// Standard evolution e^{-i |E| tau / hbar}.
double small_lambda_phase(double tau, double energy, const ClockParams& clock);

// Fast-clock limit: -(pi/4) |E| tau / hbar.
double large_lambda_phase(double tau, double energy, const ClockParams& clock);

namespace detail {
long double theta_ld(long double phi, long double energy_sq, long double abs_energy,
                     const ClockParams& clock);
}

}  // namespace oscillock
