#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oscillock/errors.hpp"
#include "oscillock/systems.hpp"

using namespace oscillock;

TEST_CASE("harmonic spectrum") {
  const auto s = harmonic_spectrum(8);
  REQUIRE(s.size() == 9);
  CHECK(s.energies()[0] == 0.5);
  CHECK(s.energies()[3] == 3.5);
  CHECK(harmonic_spectrum(3, 2.0).energies()[0] == 1.0);
  CHECK(s.kind() == SystemKind::harmonic);
  CHECK(s.oscillator().has_value());
  CHECK_THROWS_AS(harmonic_spectrum(0), DomainError);
}

TEST_CASE("spectrum invariants") {
  CHECK_THROWS_AS(Spectrum({0.5, 0.5}, {}, SystemKind::custom), DomainError);
  CHECK_THROWS_AS(Spectrum({1.0, 0.5}, {}, SystemKind::custom), DomainError);
  CHECK_THROWS_AS(Spectrum({0.0, 0.5}, {}, SystemKind::custom), DomainError);
  CHECK_THROWS_AS(Spectrum({0.5}, {"a", "b"}, SystemKind::custom), DomainError);
  const Spectrum s({-0.5, 0.5}, {}, SystemKind::custom);
  CHECK(s.labels()[1] == "k=1");
}

TEST_CASE("harmonic observables: ladder elements") {
  const auto obs = harmonic_observables(10);
  CHECK(obs.x(0, 1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(obs.x2(0, 0).real() == doctest::Approx(0.5));
  CHECK(obs.p2(0, 0).real() == doctest::Approx(0.5));
  CHECK(obs.p(1, 0).imag() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(obs.x(0, 2) == Complex{});
  CHECK(obs.x2(0, 2).real() == doctest::Approx(std::sqrt(2.0) / 2.0));

  const auto scaled = harmonic_observables(4, 2.0, 1.0, 3.0);
  CHECK(scaled.x(0, 1).real() == doctest::Approx(std::sqrt(1.0 / 12.0)));
  CHECK(scaled.p2(0, 0).real() == doctest::Approx(3.0));
}

TEST_CASE("harmonic observables: commutator and products on the interior") {
  const std::size_t n = 12;
  const double hbar = 0.7;
  const auto obs = harmonic_observables(n, 1.3, hbar, 0.9);
  const std::size_t dim = n + 1;
  for (std::size_t j = 0; j + 2 <= n; ++j) {
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      Complex xp{}, px{}, xx{}, pp{};
      for (std::size_t l = 0; l < dim; ++l) {
        xp += obs.x(j, l) * obs.p(l, k);
        px += obs.p(j, l) * obs.x(l, k);
        xx += obs.x(j, l) * obs.x(l, k);
        pp += obs.p(j, l) * obs.p(l, k);
      }
      const Complex expected = j == k ? Complex{0.0, hbar} : Complex{};
      CHECK(std::abs(xp - px - expected) <= 1e-10);
      CHECK(std::abs(xx - obs.x2(j, k)) <= 1e-12);
      CHECK(std::abs(pp - obs.p2(j, k)) <= 1e-12);
      CHECK(std::abs(0.5 * (xp + px) - obs.xp(j, k)) <= 1e-12);
    }
  }
}

TEST_CASE("observable matrices are Hermitian") {
  CHECK_THROWS_AS(ObservableMatrix("bad", 2, {0.0, 1.0, 2.0, 0.0}), DomainError);
  CHECK_THROWS_AS(ObservableMatrix("bad", 2, {Complex{0.0, 1.0}, 0.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(ObservableMatrix("short", 2, {0.0, 1.0}), DomainError);
  const ObservableMatrix ok("y", 2, {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0});
  const std::vector<Complex> up{1.0 / std::sqrt(2.0), Complex{0.0, 1.0 / std::sqrt(2.0)}};
  CHECK(ok.expectation(up).real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(ok.expectation(std::vector<Complex>{1.0}), DomainError);
}

TEST_CASE("coherent states") {
  const auto vacuum = coherent_state({0.0, 10});
  CHECK(vacuum.coefficients()[0] == Complex{1.0, 0.0});
  for (std::size_t k = 1; k <= 10; ++k) CHECK(vacuum.coefficients()[k] == Complex{});

  const auto one = coherent_state({1.0, 30});
  CHECK(std::abs(one.coefficients()[1] / one.coefficients()[0] - 1.0) <= 1e-14);

  // Poisson mean |alpha|^2, by brute-force summation.
  const auto two = coherent_state({2.0, 40});
  double mean = 0.0;
  for (std::size_t k = 0; k < two.size(); ++k) mean += static_cast<double>(k) * std::norm(two.coefficients()[k]);
  CHECK(mean == doctest::Approx(4.0).epsilon(1e-8));

  CHECK_THROWS_AS(coherent_state({4.0, 20}), DomainError);
  CHECK(coherent_tail_weight(4.0, 64) < 1e-10);
  CHECK(coherent_tail_weight(2.0, 40) < 1e-10);
  CHECK(coherent_tail_weight(4.0, 20) > 1e-10);

  const auto complex_alpha = coherent_state({Complex{0.0, 1.5}, 40});
  CHECK(complex_alpha.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("coherent state saturates the uncertainty bound") {
  const auto state = coherent_state({1.7, 60});
  const auto obs = harmonic_observables(60);
  const auto& c = state.coefficients();
  const double mx = obs.x.expectation(c).real();
  const double mp = obs.p.expectation(c).real();
  const double vx = obs.x2.expectation(c).real() - mx * mx;
  const double vp = obs.p2.expectation(c).real() - mp * mp;
  CHECK(mx == doctest::Approx(std::sqrt(2.0) * 1.7));
  CHECK(mp == doctest::Approx(0.0).scale(1.0));
  CHECK(std::sqrt(vx * vp) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("hydrogen s-states") {
  const auto h = hydrogen_system(5);
  REQUIRE(h.spectrum.size() == 5);
  CHECK(h.spectrum.energies()[0] == -0.5);
  CHECK(h.spectrum.energies()[1] == -0.125);
  CHECK(h.spectrum.labels()[0] == "1s");
  for (std::size_t a = 0; a < 5; ++a) {
    const double n = static_cast<double>(a + 1);
    CHECK(h.r(a, a).real() == doctest::Approx(1.5 * n * n).epsilon(1e-8));
    CHECK(h.r2(a, a).real() == doctest::Approx(n * n * (5.0 * n * n + 1.0) / 2.0).epsilon(1e-8));
  }
  CHECK(h.r(0, 0).real() == doctest::Approx(1.5).epsilon(1e-8));
  CHECK(h.r(1, 1).real() == doctest::Approx(6.0).epsilon(1e-8));
  // <1s|r|2s> = -64 / (81 sqrt 2) from the explicit radial functions.
  CHECK(h.r(0, 1).real() == doctest::Approx(-64.0 / (81.0 * std::sqrt(2.0))).epsilon(1e-8));
  CHECK_THROWS_AS(hydrogen_system(1), DomainError);
}

TEST_CASE("custom superpositions") {
  auto single = custom_superposition({0.5}, {1.0});
  CHECK(single.state.coefficients()[0] == Complex{1.0, 0.0});

  auto pair = custom_superposition({0.5, 1.5}, {1.0, 1.0});
  CHECK(pair.state.coefficients()[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

  auto triple = custom_superposition({0.5, 1.5, 2.5}, {1.0, 2.0, 1.0});
  CHECK(triple.state.coefficients()[1].real() == doctest::Approx(2.0 / std::sqrt(6.0)));
  CHECK(triple.state.norm_squared() == doctest::Approx(1.0).epsilon(1e-15));

  auto unsorted = custom_superposition({2.0, -1.0}, {1.0, 0.0});
  CHECK(unsorted.spectrum.energies()[0] == -1.0);
  CHECK(unsorted.state.coefficients()[1] == Complex{1.0, 0.0});

  CHECK_THROWS_AS(custom_superposition({0.5, 1.5}, {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(custom_superposition({0.5}, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(custom_superposition({0.0}, {1.0}), DomainError);
}

TEST_CASE("state vectors enforce unit norm") {
  CHECK_THROWS_AS(StateVector({1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(StateVector::normalized({0.0, 0.0}), DomainError);
  CHECK(StateVector::normalized({3.0, 4.0}).coefficients()[1].real() == doctest::Approx(0.8));
}
