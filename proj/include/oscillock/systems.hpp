#pragma once

// Bound-state systems in their energy eigenbasis: spectra, observables and
// initial states.

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace oscillock {

using Complex = std::complex<double>;

enum class SystemKind { harmonic, hydrogen, custom };

const char* to_string(SystemKind kind);

struct OscillatorParams {
  double omega = 1.0;
  double mass = 1.0;
  double hbar = 1.0;
};

class Spectrum {
 public:
  // Energies must be strictly increasing and nonzero; labels, when given,
  // must match in length (otherwise they default to "k=<index>").
  Spectrum(std::vector<double> energies, std::vector<std::string> labels, SystemKind kind,
           std::optional<OscillatorParams> oscillator = std::nullopt);

  std::size_t size() const noexcept { return energies_.size(); }
  const std::vector<double>& energies() const noexcept { return energies_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  SystemKind kind() const noexcept { return kind_; }
  // Present for harmonic spectra only.
  const std::optional<OscillatorParams>& oscillator() const noexcept { return oscillator_; }

 private:
  std::vector<double> energies_;
  std::vector<std::string> labels_;
  SystemKind kind_;
  std::optional<OscillatorParams> oscillator_;
};

class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-12;

  // Throws DomainError unless sum |c_k|^2 = 1 within kNormTolerance.
  explicit StateVector(std::vector<Complex> coefficients);

  // Scales to unit norm; throws DomainError for a zero vector.
  static StateVector normalized(std::vector<Complex> amplitudes);

  std::size_t size() const noexcept { return coefficients_.size(); }
  const std::vector<Complex>& coefficients() const noexcept { return coefficients_; }
  double norm_squared() const noexcept;

 private:
  std::vector<Complex> coefficients_;
};

// Hermitian matrix in the energy basis, stored densely together with the list
// of its nonzero entries.
class ObservableMatrix {
 public:
  static constexpr double kHermiticityTolerance = 1e-12;

  ObservableMatrix(std::string name, std::size_t dim, std::vector<Complex> row_major);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const { return elements_[row * dim_ + col]; }

  // <c| O |c>, imaginary part included so callers can check it.
  Complex expectation(std::span<const Complex> state) const;

 private:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Complex value;
  };

  std::string name_;
  std::size_t dim_;
  std::vector<Complex> elements_;
  std::vector<Entry> nonzeros_;
};

struct HarmonicObservables {
  ObservableMatrix x;
  ObservableMatrix p;
  ObservableMatrix x2;
  ObservableMatrix p2;
  ObservableMatrix xp;  // (xp + px) / 2
};

struct CoherentStateSpec {
  Complex alpha;
  std::size_t cutoff;  // highest retained level N; the basis has N + 1 states
};

struct HydrogenSystem {
  Spectrum spectrum;
  ObservableMatrix r;
  ObservableMatrix r2;
};

struct CustomSystem {
  Spectrum spectrum;
  StateVector state;
};

// E_k = hbar omega (k + 1/2), k = 0..cutoff.
Spectrum harmonic_spectrum(std::size_t cutoff, double omega = 1.0, double hbar = 1.0,
                           double mass = 1.0);

// Exact matrix elements of x, p and their quadratic combinations restricted to
// levels 0..cutoff.
HarmonicObservables harmonic_observables(std::size_t cutoff, double omega = 1.0,
                                         double hbar = 1.0, double mass = 1.0);

// Weight of the Poisson distribution with mean |alpha|^2 beyond level cutoff.
double coherent_tail_weight(Complex alpha, std::size_t cutoff);

// Throws DomainError when the truncated tail weight exceeds 1e-10.
StateVector coherent_state(const CoherentStateSpec& spec);

// l = 0 bound states n = 1..n_max in atomic units, with radius and squared
// radius matrices from quadrature of the radial functions.
HydrogenSystem hydrogen_system(std::size_t n_max);

// Amplitudes are normalized; energies are sorted (amplitudes follow them).
CustomSystem custom_superposition(std::vector<double> energies, std::vector<Complex> amplitudes);

}  // namespace oscillock
