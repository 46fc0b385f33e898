#pragma once

// Unwinding of the oscillating clock variable into a monotonic global time.
//
// The clock phi oscillates between its turning points -phi_t and +phi_t,
// with phi_t = |E| / lambda set by the energy eigenvalue it is paired with.
// Global time tau advances at the same rate as phi (d phi / d tau = +-1) and
// counts completed clock cycles, so that a cycle lasts 4 phi_t:
//
//   forward branch   4n - 1 <= tau/phi_t < 4n + 1:  phi = tau - 4n phi_t
//   backward branch  4n + 1 <= tau/phi_t < 4n + 3:  phi = (4n + 2) phi_t - tau
//
// with n = floor((1 + tau/phi_t) / 4). Both intervals are closed on the left.

#include <cstdint>
#include <vector>

namespace oscillock {

class ClockParams {
 public:
  // Throws DomainError unless lambda > 0 and hbar > 0 (both finite).
  explicit ClockParams(double lambda, double hbar = 1.0);

  double lambda() const noexcept { return lambda_; }
  double hbar() const noexcept { return hbar_; }

 private:
  double lambda_;
  double hbar_;
};

struct TurningAmplitude {
  double phi_t;
  double energy;
};

enum class ClockDirection : int { backward = -1, forward = +1 };

struct UnwoundClockSample {
  double tau;
  double phi;
  std::int64_t n;
  ClockDirection direction;
};

struct ClockPhasePoint {
  double phi;
  double p_phi;
};

// |energy| / lambda. Throws DomainError for zero (or non-finite) energy.
TurningAmplitude turning_amplitude(double energy, const ClockParams& clock);

// floor((1 + tau/phi_t) / 4). Beyond 2^52 cycles-per-turn ratios the floor is
// taken in extended precision and a diagnostics warning is emitted.
std::int64_t cycle_index(double tau, double phi_t);

UnwoundClockSample phi_of_tau(double tau, double phi_t);

// Points (phi, p_phi) on the clock's phase-space ellipse
// p_phi^2 + lambda^2 phi^2 = E^2, one full revolution starting at phi = 0,
// p_phi = +E. The first and last points coincide.
std::vector<ClockPhasePoint> clock_orbit(double energy, const ClockParams& clock,
                                         std::size_t samples);

namespace detail {

// Extended-precision unwinding shared with the phase computations: the clock
// value is reduced as tau - 4 n phi_t in long double so that it keeps its
// accuracy after ~1e9 cycles.
struct UnwoundClockLD {
  long double phi;
  std::int64_t n;
  ClockDirection direction;
};

UnwoundClockLD unwind(long double tau, long double phi_t);

}  // namespace detail
}  // namespace oscillock
