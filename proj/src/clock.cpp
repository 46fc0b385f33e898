#include "oscillock/clock.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "oscillock/diagnostics.hpp"
#include "oscillock/errors.hpp"

namespace oscillock {
namespace {

constexpr long double kExactRatioLimit = 4503599627370496.0L;  // 2^52

void check_phi_t(double phi_t) {
  if (!(phi_t > 0.0) || !std::isfinite(phi_t)) {
    throw DomainError("turning amplitude must be positive and finite");
  }
}

std::int64_t floor_cycle(long double ratio) {
  if (std::fabs(ratio) > kExactRatioLimit) {
    std::ostringstream msg;
    msg << "tau/phi_t = " << static_cast<double>(ratio)
        << " exceeds 2^52; cycle index computed in extended precision";
    diagnostics::warn(msg.str());
  }
  return static_cast<std::int64_t>(std::floor((1.0L + ratio) / 4.0L));
}

}  // namespace

ClockParams::ClockParams(double lambda, double hbar) : lambda_(lambda), hbar_(hbar) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("clock stiffness lambda must be positive and finite");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw DomainError("hbar must be positive and finite");
  }
}

TurningAmplitude turning_amplitude(double energy, const ClockParams& clock) {
  if (energy == 0.0 || !std::isfinite(energy)) {
    throw DomainError("turning amplitude undefined for zero energy: the clock never turns");
  }
  return {std::fabs(energy) / clock.lambda(), energy};
}

std::int64_t cycle_index(double tau, double phi_t) {
  check_phi_t(phi_t);
  return floor_cycle(static_cast<long double>(tau) / phi_t);
}

namespace detail {

UnwoundClockLD unwind(long double tau, long double phi_t) {
  const std::int64_t n = floor_cycle(tau / phi_t);
  // Offset from the start of cycle n in units of the clock, in [-phi_t, 3 phi_t).
  const long double offset = tau - 4.0L * static_cast<long double>(n) * phi_t;
  UnwoundClockLD out{};
  out.n = n;
  if (offset < phi_t) {
    out.phi = offset;
    out.direction = ClockDirection::forward;
  } else {
    out.phi = 2.0L * phi_t - offset;
    out.direction = ClockDirection::backward;
  }
  if (out.phi > phi_t) out.phi = phi_t;
  if (out.phi < -phi_t) out.phi = -phi_t;
  return out;
}

}  // namespace detail

UnwoundClockSample phi_of_tau(double tau, double phi_t) {
  check_phi_t(phi_t);
  const auto u = detail::unwind(tau, phi_t);
  return {tau, static_cast<double>(u.phi), u.n, u.direction};
}

std::vector<ClockPhasePoint> clock_orbit(double energy, const ClockParams& clock,
                                         std::size_t samples) {
  if (!(energy > 0.0)) throw DomainError("clock orbit requires a positive energy");
  if (samples < 2) throw DomainError("clock orbit requires at least two samples");
  const double phi_t = energy / clock.lambda();
  std::vector<ClockPhasePoint> points;
  points.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) /
                         static_cast<double>(samples - 1);
    points.push_back({phi_t * std::sin(angle), energy * std::cos(angle)});
  }
  return points;
}

}  // namespace oscillock
