#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oscillock/errors.hpp"
#include "oscillock/evolution.hpp"
#include "oscillock/phase.hpp"

using namespace oscillock;

namespace {

EvolutionRequest coherent_request(Complex alpha, std::size_t cutoff, double lambda, PhaseLaw mode,
                                  std::vector<double> grid = {}) {
  return {harmonic_spectrum(cutoff), coherent_state({alpha, cutoff}), ClockParams(lambda), std::move(grid), mode};
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

}  // namespace

TEST_CASE("phase law names round-trip") {
  for (auto law : {PhaseLaw::oscillating, PhaseLaw::small_lambda_reference, PhaseLaw::large_lambda_reference}) {
    CHECK(phase_law_from_string(to_string(law)) == law);
  }
  CHECK_THROWS_AS(phase_law_from_string("sideways"), DomainError);
}

TEST_CASE("evolution at tau = 0 is the identity") {
  const auto req = coherent_request(Complex{1.2, -0.4}, 40, 0.1, PhaseLaw::oscillating);
  const auto s = evolve_state(req, 0.0);
  for (std::size_t k = 0; k < s.size(); ++k) {
    CHECK(std::abs(s.coefficients()[k] - req.initial_state.coefficients()[k]) <= 1e-15);
  }
}

TEST_CASE("single eigenstates only change phase") {
  const auto custom = custom_superposition({0.5, 1.5, 2.5}, {0.0, 1.0, 0.0});
  const EvolutionRequest req{custom.spectrum, custom.state, ClockParams(0.3), {}, PhaseLaw::oscillating};
  const auto obs = harmonic_observables(2);
  for (double tau : {0.0, 1.0, 7.5, 123.0}) {
    const auto s = evolve_state(req, tau);
    CHECK(std::abs(s.coefficients()[1]) == doctest::Approx(1.0));
    CHECK(real_expectation(obs.x2, s.coefficients()) == doctest::Approx(1.5));
  }
}

TEST_CASE("small-lambda reference reproduces the standard coherent orbit") {
  const double alpha = 1.3;
  const auto req = coherent_request(alpha, 40, 1.0, PhaseLaw::small_lambda_reference);
  const auto obs = harmonic_observables(40);
  for (double tau = 0.0; tau < 20.0; tau += 0.37) {
    // Direct sum over the tridiagonal x matrix with phases e^{-i E_k tau}.
    const auto& c0 = req.initial_state.coefficients();
    Complex direct{};
    for (std::size_t k = 0; k + 1 < c0.size(); ++k) {
      const Complex ck = c0[k] * std::polar(1.0, -(k + 0.5) * tau);
      const Complex ck1 = c0[k + 1] * std::polar(1.0, -(k + 1.5) * tau);
      direct += 2.0 * std::conj(ck) * ck1 * std::sqrt((k + 1.0) / 2.0);
    }
    const double mean_x = expectation_at(req, obs.x, tau);
    CHECK(mean_x == doctest::Approx(direct.real()).epsilon(1e-12));
    CHECK(mean_x == doctest::Approx(std::sqrt(2.0) * alpha * std::cos(tau)).epsilon(1e-9));
  }
}

TEST_CASE("observable series") {
  const auto obs = harmonic_observables(20);
  auto vac = coherent_request(0.0, 20, 0.1, PhaseLaw::oscillating, linspace(0.0, 30.0, 61));
  for (const auto& p : observable_series(vac, obs.x, obs.x2)) {
    CHECK(p.value == doctest::Approx(0.0).scale(1.0));
    CHECK(p.variance == doctest::Approx(0.5));
  }

  // Tiny lambda: sinusoid of amplitude 2 sqrt 2, period 2 pi.
  const auto obs48 = harmonic_observables(48);
  auto coh = coherent_request(2.0, 48, 1e-5, PhaseLaw::oscillating, linspace(0.0, 4.0 * std::numbers::pi, 201));
  for (const auto& p : observable_series(coh, obs48.x, obs48.x2)) {
    CHECK(p.value == doctest::Approx(2.0 * std::sqrt(2.0) * std::cos(p.tau)).epsilon(1e-5));
    CHECK(p.variance == doctest::Approx(0.5).epsilon(1e-5));
  }

  auto bad_grid = coherent_request(1.0, 20, 0.1, PhaseLaw::oscillating, {0.0, 1.0, 1.0});
  CHECK_THROWS_AS(observable_series(bad_grid, obs.x, obs.x2), DomainError);
}

TEST_CASE("expectation of a diagonal observable") {
  const ObservableMatrix m("m", 2, {1.0, 0.0, 0.0, 3.0});
  const std::vector<Complex> c{Complex{0.6, 0.0}, Complex{0.0, 0.8}};
  CHECK(real_expectation(m, c) == doctest::Approx(0.36 + 3.0 * 0.64));
}

TEST_CASE("grid wavefunctions") {
  const auto xs = linspace(-8.0, 8.0, 801);
  const double dx = xs[1] - xs[0];
  auto vac = coherent_request(0.0, 10, 0.1, PhaseLaw::oscillating);
  for (double tau : {0.0, 3.0, 11.0}) {
    const auto psi = wavefunction_on_grid(vac, tau, xs);
    for (std::size_t i = 0; i < xs.size(); i += 40) {
      CHECK(std::abs(psi[i]) ==
            doctest::Approx(std::exp(-xs[i] * xs[i] / 2.0) / std::pow(std::numbers::pi, 0.25)).epsilon(1e-12));
    }
  }

  const double alpha = 1.5;
  auto coh = coherent_request(alpha, 50, 0.1, PhaseLaw::oscillating);
  const auto psi0 = wavefunction_on_grid(coh, 0.0, xs);
  const double x0 = std::sqrt(2.0) * alpha;
  for (std::size_t i = 0; i < xs.size(); i += 20) {
    const double expected = std::exp(-(xs[i] - x0) * (xs[i] - x0) / 2.0) / std::pow(std::numbers::pi, 0.25);
    CHECK(std::abs(psi0[i]) == doctest::Approx(expected).scale(1.0).epsilon(1e-10));
  }
  for (double tau : {0.0, 4.0, 9.5, 25.0}) {
    double norm = 0.0;
    for (const auto& v : wavefunction_on_grid(coh, tau, xs)) norm += std::norm(v) * dx;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-6));
  }

  const auto h = custom_superposition({0.5, 1.0}, {1.0, 1.0});
  const EvolutionRequest custom{h.spectrum, h.state, ClockParams(1.0), {}, PhaseLaw::oscillating};
  CHECK_THROWS_AS(wavefunction_on_grid(custom, 0.0, xs), UnsupportedSystemError);
}

TEST_CASE("norm is conserved for every phase law") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> tau(0.0, 1e4);
  for (auto law : {PhaseLaw::oscillating, PhaseLaw::small_lambda_reference, PhaseLaw::large_lambda_reference}) {
    const auto req = coherent_request(Complex{2.0, 1.0}, 64, 0.37, law);
    for (int i = 0; i < 200; ++i) {
      CHECK(std::fabs(evolve_state(req, tau(rng)).norm_squared() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("phase-space trajectories respect the uncertainty floor") {
  const auto obs = harmonic_observables(64);
  for (double lambda : {1e-5, 0.1, 1.0, 1e3}) {
    auto req = coherent_request(2.0, 64, lambda, PhaseLaw::oscillating, linspace(0.0, 60.0, 601));
    for (const auto& p : phase_space_trajectory(req, obs)) {
      CHECK(uncertainty_product(p) >= 0.25 - 1e-9);
      CHECK(p.var_x >= 0.0);
      CHECK(p.var_p >= 0.0);
      CHECK(p.norm == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("oscillating law approaches the small-lambda reference") {
  const auto obs = harmonic_observables(40);
  auto osc = coherent_request(1.0, 40, 1e-5, PhaseLaw::oscillating);
  auto ref = coherent_request(1.0, 40, 1e-5, PhaseLaw::small_lambda_reference);
  for (double tau = 0.0; tau <= 10.0; tau += 0.25) {
    const auto a = evolve_state(osc, tau).coefficients();
    const auto b = evolve_state(ref, tau).coefficients();
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (std::abs(b[k]) < 1e-8) continue;
      CHECK(std::fabs(std::arg(a[k] / b[k])) <= 1e-6);
    }
  }
}

TEST_CASE("phase-space orbit in the three regimes") {
  const auto obs = harmonic_observables(64);
  const auto grid = linspace(0.0, 40.0, 801);

  auto slow = coherent_request(2.0, 64, 1e-5, PhaseLaw::oscillating, grid);
  for (const auto& p : phase_space_trajectory(slow, obs)) {
    CHECK(std::hypot(p.mean_x, p.mean_p) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-6));
    CHECK(p.var_x == doctest::Approx(0.5).epsilon(1e-6));
  }

  auto mid = coherent_request(2.0, 64, 0.1, PhaseLaw::oscillating, grid);
  double max_var = 0.0;
  for (const auto& p : phase_space_trajectory(mid, obs)) max_var = std::max(max_var, p.var_x);
  CHECK(max_var > 1.5);

  auto fast = coherent_request(2.0, 64, 1e3, PhaseLaw::oscillating, grid);
  for (const auto& p : phase_space_trajectory(fast, obs)) {
    CHECK(p.var_x == doctest::Approx(0.5).epsilon(0.05));
    CHECK(std::hypot(p.mean_x, p.mean_p) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(0.02));
  }
}
