#pragma once

#include <array>
#include <optional>

#include "bhdimer/hamiltonian.hpp"

namespace bhdimer {

using Vector3 = std::array<double, 3>;
using Energies = std::array<double, 3>;
/// eigvecs[k][n] = <n|E_k>, one eigenvector per row.
using Eigenvectors = std::array<Vector3, 3>;

struct CubicCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Trigonometric roots of the characteristic cubic.
struct ClosedFormRoots {
  Energies energies{};
  double p = 0.0;
  double q = 0.0;
  double phi = 0.0;
};

struct TransitionFrequencies {
  double w21 = 0.0;
  double w32 = 0.0;
  double w31 = 0.0;
};

struct SpectralDecomposition {
  Energies energies{};  // strictly ascending
  Eigenvectors eigvecs{};
  double p = 0.0;
  double q = 0.0;
  double phi = 0.0;
  TransitionFrequencies freqs{};
};

/// Coefficients of E^3 + alpha E^2 + beta E + gamma = 0.
CubicCoefficients characteristic_coefficients(const SymmetricMatrix3& m);

/// Throws DegenerateSpectrum when the discriminant p^3 + q^2 is not safely
/// negative.
ClosedFormRoots closed_form_eigenvalues(const SymmetricMatrix3& m);

/// Spectrum of the pure tunneling Hamiltonian (eps0 = eps01 = U = 0).
Energies tunneling_spectrum(double eps1, double J, double K);

/// Fock-basis eigenvector from the rational closed form. Empty when the
/// branch is unavailable (H01 = 0 or the A_k denominator vanishes).
std::optional<Vector3> fock_projection(const SymmetricMatrix3& m, double energy);

/// Null vector of (M - E I) from the best-conditioned row cross product.
Vector3 null_space_vector(const SymmetricMatrix3& m, double energy);

/// Unit eigenvectors, one per energy, with <2|E_k> > 0 (or the
/// largest-magnitude entry positive when <2|E_k> vanishes).
Eigenvectors eigenvectors(const SymmetricMatrix3& m, const Energies& energies);

TransitionFrequencies transition_frequencies(const Energies& energies);

/// Frequencies from the trigonometric parametrization (p, phi).
TransitionFrequencies closed_form_frequencies(double p, double phi);

/// Full closed-form decomposition. Cross-checks the trigonometric
/// frequencies against energy differences.
SpectralDecomposition decompose(const SymmetricMatrix3& m);

}  // namespace bhdimer
