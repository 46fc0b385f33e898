#include "oscillock/evolution.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "oscillock/errors.hpp"
#include "oscillock/parallel.hpp"
#include "oscillock/phase.hpp"

namespace oscillock {

const char* to_string(PhaseLaw law) {
  switch (law) {
    case PhaseLaw::oscillating: return "oscillating";
    case PhaseLaw::small_lambda_reference: return "small_lambda_reference";
    case PhaseLaw::large_lambda_reference: return "large_lambda_reference";
  }
  return "unknown";
}

PhaseLaw phase_law_from_string(std::string_view name) {
  if (name == "oscillating") return PhaseLaw::oscillating;
  if (name == "small_lambda_reference") return PhaseLaw::small_lambda_reference;
  if (name == "large_lambda_reference") return PhaseLaw::large_lambda_reference;
  throw DomainError("unknown phase law '" + std::string(name) + "'");
}

void validate(const EvolutionRequest& request) {
  if (request.initial_state.size() != request.spectrum.size()) {
    throw DomainError("initial state does not match the spectrum dimension");
  }
  for (std::size_t i = 1; i < request.tau_grid.size(); ++i) {
    if (!(request.tau_grid[i] > request.tau_grid[i - 1])) {
      throw DomainError("tau grid must be strictly increasing");
    }
  }
}

double eigen_phase(PhaseLaw law, double tau, double energy, const ClockParams& clock) {
  switch (law) {
    case PhaseLaw::oscillating:
      return accumulated_phase(tau, energy, clock).wrapped_phase();
    case PhaseLaw::small_lambda_reference:
      return std::remainder(small_lambda_phase(tau, energy, clock), 2.0 * std::numbers::pi);
    case PhaseLaw::large_lambda_reference:
      return std::remainder(large_lambda_phase(tau, energy, clock), 2.0 * std::numbers::pi);
  }
  return 0.0;
}

namespace {

std::vector<Complex> evolved_coefficients(const EvolutionRequest& request, double tau) {
  const auto& energies = request.spectrum.energies();
  const auto& c0 = request.initial_state.coefficients();
  if (c0.size() != energies.size()) {
    throw DomainError("initial state does not match the spectrum dimension");
  }
  std::vector<Complex> c(c0.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c0[k] == Complex{}) continue;
    c[k] = c0[k] * std::polar(1.0, eigen_phase(request.mode, tau, energies[k], request.clock));
  }
  return c;
}

}  // namespace

StateVector evolve_state(const EvolutionRequest& request, double tau) {
  return StateVector(evolved_coefficients(request, tau));
}

double real_expectation(const ObservableMatrix& observable, std::span<const Complex> state) {
  const Complex value = observable.expectation(state);
  if (std::fabs(value.imag()) > 1e-8) {
    std::ostringstream msg;
    msg << "expectation of '" << observable.name() << "' has imaginary part " << value.imag();
    throw NumericalError(msg.str());
  }
  return value.real();
}

double expectation_at(const EvolutionRequest& request, const ObservableMatrix& observable,
                      double tau) {
  return real_expectation(observable, evolved_coefficients(request, tau));
}

std::vector<SeriesPoint> observable_series(const EvolutionRequest& request,
                                           const ObservableMatrix& observable,
                                           const ObservableMatrix& squared) {
  validate(request);
  std::vector<SeriesPoint> out(request.tau_grid.size());
  parallel_for(out.size(), [&](std::size_t i) {
    const double tau = request.tau_grid[i];
    const auto c = evolved_coefficients(request, tau);
    const double mean = real_expectation(observable, c);
    const double second = real_expectation(squared, c);
    out[i] = {tau, mean, second - mean * mean};
  });
  return out;
}

std::vector<Complex> wavefunction_on_grid(const EvolutionRequest& request, double tau,
                                          std::span<const double> x_grid) {
  const auto& osc = request.spectrum.oscillator();
  if (request.spectrum.kind() != SystemKind::harmonic || !osc) {
    throw UnsupportedSystemError(std::string("grid wavefunctions need a harmonic system, got ") +
                                 to_string(request.spectrum.kind()));
  }
  const auto c = evolved_coefficients(request, tau);
  const double scale = std::sqrt(osc->mass * osc->omega / osc->hbar);
  const double prefactor = std::sqrt(std::sqrt(scale * scale / std::numbers::pi));
  std::vector<Complex> psi(x_grid.size());
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    const double xi = scale * x_grid[i];
    // Normalized Hermite functions by the stable three-term recurrence.
    double prev = 0.0;
    double curr = prefactor * std::exp(-xi * xi / 2.0);
    Complex sum = c[0] * curr;
    for (std::size_t k = 1; k < c.size(); ++k) {
      const double kk = static_cast<double>(k);
      const double next = std::sqrt(2.0 / kk) * xi * curr - std::sqrt((kk - 1.0) / kk) * prev;
      prev = curr;
      curr = next;
      sum += c[k] * curr;
    }
    psi[i] = sum;
  }
  return psi;
}

std::vector<TrajectoryPoint> phase_space_trajectory(const EvolutionRequest& request,
                                                    const HarmonicObservables& obs) {
  validate(request);
  std::vector<TrajectoryPoint> out(request.tau_grid.size());
  parallel_for(out.size(), [&](std::size_t i) {
    const double tau = request.tau_grid[i];
    const auto c = evolved_coefficients(request, tau);
    TrajectoryPoint pt{};
    pt.tau = tau;
    pt.mean_x = real_expectation(obs.x, c);
    pt.mean_p = real_expectation(obs.p, c);
    pt.var_x = real_expectation(obs.x2, c) - pt.mean_x * pt.mean_x;
    pt.var_p = real_expectation(obs.p2, c) - pt.mean_p * pt.mean_p;
    pt.covar_xp = real_expectation(obs.xp, c) - pt.mean_x * pt.mean_p;
    double norm = 0.0;
    for (const auto& ck : c) norm += std::norm(ck);
    pt.norm = norm;
    out[i] = pt;
  });
  return out;
}

double uncertainty_product(const TrajectoryPoint& point) {
  return point.var_x * point.var_p - point.covar_xp * point.covar_xp;
}

}  // namespace oscillock
