#pragma once

#include <array>
#include <complex>
#include <optional>

#include "bhdimer/hamiltonian.hpp"
#include "bhdimer/spectral.hpp"

namespace bhdimer {

using Complex = std::complex<double>;
using Amplitudes = std::array<Complex, 3>;
using ComplexMatrix3 = std::array<std::array<Complex, 3>, 3>;

enum class Basis { Fock, Energy };

/// Energy-basis weights r_i and phases theta_i of an initial state.
class EnergyDistribution {
 public:
  /// Validates r_i >= 0, sum r_i = 1 (1e-12) and reduces phases mod 2 pi.
  explicit EnergyDistribution(const std::array<double, 3>& r,
                              const std::array<double, 3>& theta = {});

  const std::array<double, 3>& r() const { return r_; }
  const std::array<double, 3>& theta() const { return theta_; }

 private:
  std::array<double, 3> r_;
  std::array<double, 3> theta_;
};

class QutritState {
 public:
  /// Throws InvalidArgument unless sum |amps|^2 = 1 within 1e-12.
  QutritState(const Amplitudes& amps, Basis basis);

  const Amplitudes& amps() const { return amps_; }
  Basis basis() const { return basis_; }
  double norm() const;

 private:
  Amplitudes amps_;
  Basis basis_;
};

struct Populations {
  std::array<double, 3> R{};
};

struct OccupationStats {
  double mean = 0.0;
  double variance = 0.0;
};

/// Amplitudes on the symmetric Bell states, with |0> = |00>_AB,
/// |2> = |11>_AB and |1> = Psi+.
struct BellAmplitudes {
  Complex phi_plus;
  Complex phi_minus;
  Complex psi_plus;
};

QutritState prepare_state(const EnergyDistribution& dist);

/// Exact evolution in the energy basis (hbar = 1).
QutritState evolve(const QutritState& state, const Energies& energies, double t);

QutritState to_fock(const QutritState& state, const Eigenvectors& eigvecs);
QutritState to_energy(const QutritState& state, const Eigenvectors& eigvecs);

Populations populations(const QutritState& state);

/// <psi(0)|psi(t)> = sum_i r_i exp(-i E_i t); independent of the phases.
Complex survival_amplitude(const EnergyDistribution& dist,
                           const Energies& energies, double t);

inline constexpr double kDefaultOrthogonalityTol = 1e-9;

/// Smallest t in (0, t_max] where |survival amplitude| < tol, or nullopt.
std::optional<double> find_orthogonality_time(
    const EnergyDistribution& dist, const Energies& energies, double t_max,
    double tol = kDefaultOrthogonalityTol);

/// exp(-i M t) by scaling and squaring of a truncated Taylor series.
/// Independent of the closed-form spectral route.
ComplexMatrix3 propagator_oracle(const SymmetricMatrix3& m, double t);

/// Applies a 3x3 complex matrix to Fock-basis amplitudes.
QutritState apply_propagator(const ComplexMatrix3& u, const QutritState& state);

/// Mean and variance of the site-1 occupation n.
OccupationStats mode_occupation_stats(const QutritState& state);

BellAmplitudes bell_decomposition(const QutritState& state);

}  // namespace bhdimer
