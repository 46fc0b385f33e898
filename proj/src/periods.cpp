#include "oscillock/periods.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "oscillock/diagnostics.hpp"
#include "oscillock/errors.hpp"
#include "oscillock/parallel.hpp"

namespace oscillock {
namespace {

constexpr double kQuarterCycleConstant = 21.0 * std::numbers::pi * std::numbers::pi - 1024.0 / 5.0;

bool opposite_signs(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

double bisect(const RealFunction& f, double a, double b, double fa, double tolerance) {
  for (int iter = 0; iter < 200 && (b - a) > tolerance; ++iter) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (opposite_signs(fa, fm)) {
      b = mid;
    } else {
      a = mid;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

using Clock = std::chrono::steady_clock;

// Crossings of <observable> on [t_start, t_end], sampled every dt and
// processed in chunks so long runs need little memory.
std::vector<double> walk_crossings(const EvolutionRequest& request,
                                   const ObservableMatrix& observable, double t_end, double dt,
                                   std::size_t max_crossings,
                                   std::optional<Clock::time_point> deadline, double& tau_reached) {
  const RealFunction f = [&](double tau) { return expectation_at(request, observable, tau); };
  constexpr std::size_t kChunk = 2048;
  std::vector<double> crossings;
  std::vector<SamplePoint> chunk;
  chunk.reserve(kChunk + 1);
  std::size_t index = 0;
  const auto total = static_cast<std::size_t>(std::floor(t_end / dt)) + 1;
  tau_reached = 0.0;
  while (index < total) {
    const bool continuation = !chunk.empty();
    if (continuation) chunk.erase(chunk.begin(), chunk.end() - 1);
    const std::size_t stop = std::min(total, index + kChunk);
    for (; index < stop; ++index) {
      const double tau = static_cast<double>(index) * dt;
      chunk.push_back({tau, f(tau)});
    }
    for (double c : find_zero_crossings(chunk, f)) {
      if (continuation && c == chunk.front().tau) continue;  // counted in the previous chunk
      crossings.push_back(c);
      if (crossings.size() >= max_crossings) {
        tau_reached = c;
        return crossings;
      }
    }
    tau_reached = chunk.back().tau;
    if (deadline && Clock::now() > *deadline) break;
  }
  return crossings;
}

}  // namespace

std::vector<double> find_zero_crossings(std::span<const SamplePoint> series,
                                        const RealFunction& refine) {
  std::vector<double> out;
  if (series.empty()) return out;
  const double spacing =
      series.size() > 1 ? (series.back().tau - series.front().tau) / static_cast<double>(series.size() - 1)
                        : 0.0;
  const double tolerance = 1e-10 * std::fabs(spacing);
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    if (s.value == 0.0) {
      if (i == 0 || series[i - 1].value != 0.0) out.push_back(s.tau);
      continue;
    }
    if (i == 0) continue;
    const auto& prev = series[i - 1];
    if (!opposite_signs(prev.value, s.value)) continue;
    double root = prev.tau - prev.value * (s.tau - prev.tau) / (s.value - prev.value);
    if (refine) {
      const double fa = refine(prev.tau);
      const double fb = refine(s.tau);
      if (opposite_signs(fa, fb)) root = bisect(refine, prev.tau, s.tau, fa, tolerance);
    }
    out.push_back(root);
  }
  return out;
}

PeriodEnsemble period_ensemble(std::span<const double> crossings) {
  if (crossings.size() < 3) {
    throw InsufficientDataError("period statistics need at least 3 zero crossings, got " +
                                std::to_string(crossings.size()));
  }
  PeriodEnsemble e;
  for (std::size_t i = 1; i < crossings.size(); ++i) {
    e.periods.push_back(2.0 * (crossings[i] - crossings[i - 1]));
  }
  const auto n = static_cast<double>(e.periods.size());
  double sum = 0.0;
  for (double p : e.periods) sum += p;
  e.mean_period = sum / n;
  double ss = 0.0;
  for (double p : e.periods) ss += (p - e.mean_period) * (p - e.mean_period);
  e.std_dev = std::sqrt(ss / (n - 1.0));
  e.relative_std_dev = e.std_dev / e.mean_period;
  return e;
}

double fitted_period(std::span<const double> crossings) {
  if (crossings.size() < 2) {
    throw InsufficientDataError("period fit needs at least 2 zero crossings");
  }
  const auto n = static_cast<double>(crossings.size());
  const double mean_i = (n - 1.0) / 2.0;
  double mean_t = 0.0;
  for (double c : crossings) mean_t += c;
  mean_t /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const double di = static_cast<double>(i) - mean_i;
    sxy += di * (crossings[i] - mean_t);
    sxx += di * di;
  }
  return 2.0 * sxy / sxx;
}

double analytic_sigma(double energy_sq, const ClockParams& clock, bool rescale) {
  const double sigma = energy_sq * std::sqrt(kQuarterCycleConstant) / (24.0 * clock.lambda() * clock.hbar());
  return rescale ? sigma * 2.0 / std::numbers::pi : sigma;
}

double mean_energy_squared(const Spectrum& spectrum, const StateVector& state) {
  if (spectrum.size() != state.size()) {
    throw DomainError("state does not match the spectrum dimension");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < state.size(); ++k) {
    const double e = spectrum.energies()[k];
    sum += std::norm(state.coefficients()[k]) * e * e;
  }
  return sum;
}

std::vector<double> observable_crossings(const EvolutionRequest& request,
                                         const ObservableMatrix& observable, double tau_end,
                                         double dt, std::size_t max_crossings) {
  if (!(dt > 0.0)) throw DomainError("sampling step must be positive");
  double reached = 0.0;
  return walk_crossings(request, observable, tau_end, dt, max_crossings, std::nullopt, reached);
}

double reference_system_period(const Spectrum& spectrum, const StateVector& state, double hbar) {
  double min_gap = 0.0;
  double last = 0.0;
  bool have_last = false;
  for (std::size_t k = 0; k < state.size(); ++k) {
    if (std::norm(state.coefficients()[k]) <= 1e-6) continue;
    const double e = spectrum.energies()[k];
    if (have_last) {
      const double gap = std::fabs(e - last);
      if (min_gap == 0.0 || gap < min_gap) min_gap = gap;
    }
    last = e;
    have_last = true;
  }
  return min_gap > 0.0 ? 2.0 * std::numbers::pi * hbar / min_gap : 0.0;
}

SigmaPoint measure_sigma(const EvolutionRequest& request, const ObservableMatrix& observable,
                         const SweepOptions& options) {
  SigmaPoint point;
  point.lambda = request.clock.lambda();
  point.analytic_sigma = analytic_sigma(mean_energy_squared(request.spectrum, request.initial_state),
                                        request.clock, true);
  const double reference =
      reference_system_period(request.spectrum, request.initial_state, request.clock.hbar());
  if (reference == 0.0) {
    point.note = "state populates a single eigenstate; expectation values do not oscillate";
    return point;
  }
  const double dt = reference / options.samples_per_period;
  const double tau_end = options.max_tau > 0.0
                             ? options.max_tau
                             : 8.0 * static_cast<double>(options.target_periods) * reference;
  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(options.time_budget_seconds));
  double reached = 0.0;
  const auto crossings = walk_crossings(request, observable, tau_end, dt,
                                        2 * options.target_periods + 1, deadline, reached);
  point.tau_covered = reached;
  const std::size_t covered = crossings.empty() ? 0 : (crossings.size() - 1) / 2;
  if (covered < options.min_periods || crossings.size() < 3) {
    std::ostringstream msg;
    msg << "only " << covered << " system periods resolved (need " << options.min_periods << ")";
    point.note = msg.str();
    return point;
  }
  const auto ensemble = period_ensemble(crossings);
  point.numeric_sigma = ensemble.relative_std_dev;
  point.mean_period = ensemble.mean_period;
  point.n_periods = ensemble.periods.size();
  point.resolved = true;
  return point;
}

SigmaComparison sigma_vs_lambda(const EvolutionRequest& request_template,
                                const ObservableMatrix& observable,
                                std::span<const double> lambda_grid, const SweepOptions& options) {
  SigmaComparison out;
  out.rescale = 2.0 / std::numbers::pi;
  out.points.resize(lambda_grid.size());
  parallel_for(lambda_grid.size(), [&](std::size_t i) {
    EvolutionRequest request = request_template;
    request.clock = ClockParams(lambda_grid[i], request_template.clock.hbar());
    out.points[i] = measure_sigma(request, observable, options);
  });
  std::vector<double> fit_lambda, fit_numeric, fit_analytic;
  for (const auto& p : out.points) {
    if (!p.resolved) {
      diagnostics::warn("sigma sweep: lambda = " + std::to_string(p.lambda) + " excluded: " + p.note);
      continue;
    }
    out.lambda_values.push_back(p.lambda);
    out.numeric_sigma.push_back(p.numeric_sigma);
    out.analytic_sigma.push_back(p.analytic_sigma);
    out.n_periods.push_back(p.n_periods);
  }
  const bool fit = out.lambda_values.size() >= 2;
  out.numeric_slope = fit ? log_log_slope(out.lambda_values, out.numeric_sigma) : std::nan("");
  out.analytic_slope = fit ? log_log_slope(out.lambda_values, out.analytic_sigma) : std::nan("");
  return out;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InsufficientDataError("log-log slope needs at least two (x, y) pairs");
  }
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("log-log slope needs positive data");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

double clock_period_coefficient() {
  return 48.0 / (std::numbers::pi * std::sqrt(kQuarterCycleConstant));
}

double clock_period_bound(double sigma, double system_period) {
  if (!(sigma >= 0.0)) throw DomainError("relative deviation must be non-negative");
  if (!(system_period > 0.0)) throw DomainError("system period must be positive");
  return clock_period_coefficient() * sigma * system_period;
}

}  // namespace oscillock
