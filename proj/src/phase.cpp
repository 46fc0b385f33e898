#include "oscillock/phase.hpp"

#include <cmath>
#include <numbers>

#include "oscillock/errors.hpp"

namespace oscillock {
namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kTurningTolerance = 1e-12L;

void check_energy(double energy) {
  if (energy == 0.0 || !std::isfinite(energy)) {
    throw DomainError("zero-energy eigenstates have no clock turning point");
  }
}

// pi E^2 / (lambda hbar): magnitude of the full-cycle phase increment.
long double cycle_phase(long double energy_sq, const ClockParams& clock) {
  return kPi * energy_sq / (static_cast<long double>(clock.lambda()) * clock.hbar());
}

}  // namespace

namespace detail {

long double theta_ld(long double phi, long double energy_sq, long double abs_energy,
                     const ClockParams& clock) {
  const long double lambda = clock.lambda();
  const long double u = lambda * phi / abs_energy;
  const long double quarter = cycle_phase(energy_sq, clock) / 4.0L;
  if (std::fabs(u) > 1.0L + kTurningTolerance) {
    throw DomainError("clock value outside its turning points; unwind the clock first");
  }
  if (std::fabs(u) >= 1.0L - kTurningTolerance) {
    return u > 0 ? -quarter : quarter;
  }
  const long double root = abs_energy * std::sqrt((1.0L - u) * (1.0L + u));
  return -(phi * root + energy_sq / lambda * std::asin(u)) / (2.0L * clock.hbar());
}

}  // namespace detail

long double EigenPhase::total_phase() const noexcept {
  return static_cast<long double>(half_cycles) * half_cycle_increment + branch_phase;
}

double EigenPhase::wrapped_phase() const noexcept {
  constexpr long double two_pi = 2.0L * kPi;
  // Reduce the cycle part on its own first; it carries almost all the magnitude.
  long double cycles = std::remainder(static_cast<long double>(half_cycles) * half_cycle_increment, two_pi);
  long double total = std::remainder(cycles + branch_phase, two_pi);
  if (total <= -kPi) total += two_pi;
  return static_cast<double>(total);
}

long double phase_difference(const EigenPhase& a, const EigenPhase& b) {
  return static_cast<long double>(a.half_cycles - b.half_cycles) * a.half_cycle_increment +
         (a.branch_phase - b.branch_phase);
}

double theta(double phi, double energy, const ClockParams& clock) {
  check_energy(energy);
  const long double e = energy;
  return static_cast<double>(detail::theta_ld(phi, e * e, std::fabs(e), clock));
}

double half_cycle_increment(double energy, const ClockParams& clock) {
  const long double e = energy;
  return static_cast<double>(-cycle_phase(e * e, clock) / 2.0L);
}

EigenPhase accumulated_phase(double tau, double energy, const ClockParams& clock) {
  check_energy(energy);
  const long double e = energy;
  const long double abs_e = std::fabs(e);
  const long double energy_sq = e * e;
  const long double phi_t = abs_e / clock.lambda();
  const auto clock_state = detail::unwind(tau, phi_t);
  const long double local = detail::theta_ld(clock_state.phi, energy_sq, abs_e, clock);

  EigenPhase out{};
  out.energy = energy;
  out.tau = tau;
  out.half_cycle_increment = -cycle_phase(energy_sq, clock) / 2.0L;
  // Forward branch of cycle n:  -n Q + Theta(phi)
  // Backward branch of cycle n: -(n + 1/2) Q - Theta(phi)
  // with Q = pi E^2 / (lambda hbar); both vanish at tau = 0.
  if (clock_state.direction == ClockDirection::forward) {
    out.half_cycles = 2 * clock_state.n;
    out.branch_phase = local;
  } else {
    out.half_cycles = 2 * clock_state.n + 1;
    out.branch_phase = -local;
  }
  return out;
}

double small_lambda_phase(double tau, double energy, const ClockParams& clock) {
  return -std::fabs(energy) * tau / clock.hbar();
}

double large_lambda_phase(double tau, double energy, const ClockParams& clock) {
  return -std::numbers::pi / 4.0 * std::fabs(energy) * tau / clock.hbar();
}

}  // namespace oscillock
