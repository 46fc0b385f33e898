#include "oscillock/systems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "oscillock/errors.hpp"

namespace oscillock {

const char* to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::harmonic: return "harmonic";
    case SystemKind::hydrogen: return "hydrogen";
    case SystemKind::custom: return "custom";
  }
  return "unknown";
}

Spectrum::Spectrum(std::vector<double> energies, std::vector<std::string> labels,
                   SystemKind kind, std::optional<OscillatorParams> oscillator)
    : energies_(std::move(energies)),
      labels_(std::move(labels)),
      kind_(kind),
      oscillator_(oscillator) {
  if (energies_.empty()) throw DomainError("spectrum is empty");
  for (std::size_t k = 0; k < energies_.size(); ++k) {
    if (energies_[k] == 0.0 || !std::isfinite(energies_[k])) {
      throw DomainError("spectrum energies must be finite and nonzero");
    }
    if (k > 0 && !(energies_[k] > energies_[k - 1])) {
      throw DomainError("spectrum energies must be strictly increasing");
    }
  }
  if (labels_.empty()) {
    for (std::size_t k = 0; k < energies_.size(); ++k) labels_.push_back("k=" + std::to_string(k));
  } else if (labels_.size() != energies_.size()) {
    throw DomainError("spectrum labels do not match the number of energies");
  }
}

StateVector::StateVector(std::vector<Complex> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw DomainError("state vector is empty");
  if (std::fabs(norm_squared() - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "state vector is not normalized (norm^2 = " << norm_squared() << ")";
    throw DomainError(msg.str());
  }
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
  double sum = 0.0;
  for (const auto& c : amplitudes) sum += std::norm(c);
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    throw DomainError("amplitude list has zero norm");
  }
  const double scale = 1.0 / std::sqrt(sum);
  for (auto& c : amplitudes) c *= scale;
  return StateVector(std::move(amplitudes));
}

double StateVector::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& c : coefficients_) sum += std::norm(c);
  return sum;
}

ObservableMatrix::ObservableMatrix(std::string name, std::size_t dim, std::vector<Complex> row_major)
    : name_(std::move(name)), dim_(dim), elements_(std::move(row_major)) {
  if (elements_.size() != dim_ * dim_) {
    throw DomainError("observable '" + name_ + "' has the wrong number of elements");
  }
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = (*this)(j, k);
      if (std::abs(a - std::conj((*this)(k, j))) > kHermiticityTolerance) {
        throw DomainError("observable '" + name_ + "' is not Hermitian");
      }
      if (a != Complex{}) nonzeros_.push_back({j, k, a});
    }
  }
}

Complex ObservableMatrix::expectation(std::span<const Complex> state) const {
  if (state.size() != dim_) {
    throw DomainError("observable '" + name_ + "' does not match the state dimension");
  }
  Complex sum{};
  for (const auto& e : nonzeros_) sum += std::conj(state[e.row]) * e.value * state[e.col];
  return sum;
}

Spectrum harmonic_spectrum(std::size_t cutoff, double omega, double hbar, double mass) {
  if (cutoff < 1) throw DomainError("harmonic cutoff must be at least 1");
  if (!(omega > 0.0) || !(hbar > 0.0) || !(mass > 0.0)) {
    throw DomainError("harmonic parameters must be positive");
  }
  std::vector<double> energies(cutoff + 1);
  std::vector<std::string> labels(cutoff + 1);
  for (std::size_t k = 0; k <= cutoff; ++k) {
    energies[k] = hbar * omega * (static_cast<double>(k) + 0.5);
    labels[k] = "n=" + std::to_string(k);
  }
  return Spectrum(std::move(energies), std::move(labels), SystemKind::harmonic,
                  OscillatorParams{omega, mass, hbar});
}

HarmonicObservables harmonic_observables(std::size_t cutoff, double omega, double hbar,
                                         double mass) {
  if (cutoff < 1) throw DomainError("harmonic cutoff must be at least 1");
  const std::size_t dim = cutoff + 1;
  const double sx = std::sqrt(hbar / (2.0 * mass * omega));  // x = sx (a + a^+)
  const double sp = std::sqrt(hbar * mass * omega / 2.0);    // p = i sp (a^+ - a)
  const Complex i{0.0, 1.0};

  std::vector<Complex> x(dim * dim), p(dim * dim), x2(dim * dim), p2(dim * dim), xp(dim * dim);
  auto at = [dim](std::vector<Complex>& m, std::size_t r, std::size_t c) -> Complex& {
    return m[r * dim + c];
  };
  for (std::size_t k = 0; k < dim; ++k) {
    const double kk = static_cast<double>(k);
    at(x2, k, k) = sx * sx * (2.0 * kk + 1.0);
    at(p2, k, k) = sp * sp * (2.0 * kk + 1.0);
    if (k + 1 < dim) {
      const double a1 = std::sqrt(kk + 1.0);
      at(x, k + 1, k) = sx * a1;
      at(x, k, k + 1) = sx * a1;
      at(p, k + 1, k) = i * sp * a1;
      at(p, k, k + 1) = -i * sp * a1;
    }
    if (k + 2 < dim) {
      const double a2 = std::sqrt((kk + 1.0) * (kk + 2.0));
      at(x2, k + 2, k) = sx * sx * a2;
      at(x2, k, k + 2) = sx * sx * a2;
      at(p2, k + 2, k) = -sp * sp * a2;
      at(p2, k, k + 2) = -sp * sp * a2;
      // (xp + px)/2 = i (hbar/2) (a^+^2 - a^2)
      at(xp, k + 2, k) = i * (hbar / 2.0) * a2;
      at(xp, k, k + 2) = -i * (hbar / 2.0) * a2;
    }
  }
  return {ObservableMatrix("x", dim, std::move(x)), ObservableMatrix("p", dim, std::move(p)),
          ObservableMatrix("x2", dim, std::move(x2)), ObservableMatrix("p2", dim, std::move(p2)),
          ObservableMatrix("xp", dim, std::move(xp))};
}

double coherent_tail_weight(Complex alpha, std::size_t cutoff) {
  const double mean = std::norm(alpha);
  if (mean == 0.0) return 0.0;
  // Sum the Poisson tail directly from k = cutoff + 1 in log space.
  const double log_mean = std::log(mean);
  double tail = 0.0;
  for (std::size_t k = cutoff + 1;; ++k) {
    const double kk = static_cast<double>(k);
    const double term = std::exp(-mean + kk * log_mean - std::lgamma(kk + 1.0));
    tail += term;
    if (kk > mean && term < 1e-18 * std::max(tail, 1e-300)) break;
    if (term == 0.0 && kk > mean) break;
  }
  return tail;
}

StateVector coherent_state(const CoherentStateSpec& spec) {
  if (spec.cutoff < 1) throw DomainError("coherent state cutoff must be at least 1");
  const double tail = coherent_tail_weight(spec.alpha, spec.cutoff);
  if (tail > 1e-10) {
    std::ostringstream msg;
    msg << "cutoff " << spec.cutoff << " truncates a Poisson weight of " << tail
        << " (> 1e-10) for |alpha| = " << std::abs(spec.alpha);
    throw DomainError(msg.str());
  }
  std::vector<Complex> c(spec.cutoff + 1);
  c[0] = std::exp(-std::norm(spec.alpha) / 2.0);
  for (std::size_t k = 1; k <= spec.cutoff; ++k) {
    c[k] = c[k - 1] * spec.alpha / std::sqrt(static_cast<double>(k));
  }
  return StateVector::normalized(std::move(c));
}

namespace {

// Normalized l = 0 radial function R_n0(r) in units of the Bohr radius.
double radial_s(unsigned n, double r) {
  const double nn = n;
  return 2.0 / std::pow(nn, 2.5) * std::exp(-r / nn) * std::assoc_laguerre(n - 1, 1, 2.0 * r / nn);
}

double radial_moment(unsigned n_row, unsigned n_col, int power) {
  auto integrand = [=](double r) {
    return radial_s(n_row, r) * radial_s(n_col, r) * std::pow(r, power + 2);
  };
  // Beyond r_max the exponential factor e^{-beta r} has swamped the polynomial.
  const double beta = 1.0 / n_row + 1.0 / n_col;
  const double degree = static_cast<double>(n_row + n_col) + power;
  const double r_max = (80.0 + 4.0 * degree) / beta;
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, r_max, 25, 1e-14, &error);
  const double scale = std::max(1.0, std::fabs(value));
  if (!std::isfinite(value) || error > 1e-10 * scale) {
    std::ostringstream msg;
    msg << "radial quadrature <" << n_row << "s|r^" << power << "|" << n_col
        << "s> did not converge (estimate " << value << ", error " << error << ")";
    throw NumericalError(msg.str());
  }
  return value;
}

}  // namespace

HydrogenSystem hydrogen_system(std::size_t n_max) {
  if (n_max < 2) throw DomainError("hydrogen system needs n_max >= 2");
  std::vector<double> energies(n_max);
  std::vector<std::string> labels(n_max);
  std::vector<Complex> r(n_max * n_max), r2(n_max * n_max);
  for (std::size_t a = 0; a < n_max; ++a) {
    const double n = static_cast<double>(a + 1);
    energies[a] = -1.0 / (2.0 * n * n);
    labels[a] = std::to_string(a + 1) + "s";
    for (std::size_t b = a; b < n_max; ++b) {
      const auto na = static_cast<unsigned>(a + 1), nb = static_cast<unsigned>(b + 1);
      const double m1 = radial_moment(na, nb, 1);
      const double m2 = radial_moment(na, nb, 2);
      r[a * n_max + b] = r[b * n_max + a] = m1;
      r2[a * n_max + b] = r2[b * n_max + a] = m2;
    }
  }
  return {Spectrum(std::move(energies), std::move(labels), SystemKind::hydrogen),
          ObservableMatrix("r", n_max, std::move(r)), ObservableMatrix("r2", n_max, std::move(r2))};
}

CustomSystem custom_superposition(std::vector<double> energies, std::vector<Complex> amplitudes) {
  if (energies.size() != amplitudes.size()) {
    throw DomainError("energies and amplitudes differ in length");
  }
  if (energies.empty()) throw DomainError("custom superposition is empty");
  std::vector<std::size_t> order(energies.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return energies[a] < energies[b]; });
  std::vector<double> e;
  std::vector<Complex> c;
  std::vector<std::string> labels;
  for (auto idx : order) {
    e.push_back(energies[idx]);
    c.push_back(amplitudes[idx]);
    labels.push_back("k=" + std::to_string(idx));
  }
  auto state = StateVector::normalized(std::move(c));
  return {Spectrum(std::move(e), std::move(labels), SystemKind::custom), std::move(state)};
}

}  // namespace oscillock
