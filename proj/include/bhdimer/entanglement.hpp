#pragma once

#include <span>
#include <vector>

#include "bhdimer/dynamics.hpp"
#include "bhdimer/spectral.hpp"

namespace bhdimer {

enum class TimeUnit { Absolute, OverTau };

/// Concurrence sampled on a time grid. With TimeUnit::OverTau the stored
/// times are t / tau.
struct ConcurrenceSeries {
  std::vector<double> times;
  std::vector<double> values;
  TimeUnit time_unit = TimeUnit::Absolute;
  double tau = 1.0;
};

/// S_L = 1 - sum R_n^2, in [0, 2/3].
double linear_entropy(const Populations& pops);

/// Qutrit concurrence sqrt(3/2 * S_L), clipped to [0, 1].
double concurrence(const Populations& pops);

/// Time-independent concurrence when the Hamiltonian is diagonal in the
/// Fock basis.
double diagonal_concurrence(const std::array<double, 3>& r);
double diagonal_concurrence(const EnergyDistribution& dist);

/// C(t) on an absolute time grid.
ConcurrenceSeries concurrence_series(const EnergyDistribution& dist,
                                     const SpectralDecomposition& decomp,
                                     std::span<const double> grid);

/// C(t) on a grid of t / tau.
ConcurrenceSeries concurrence_series(const EnergyDistribution& dist,
                                     const SpectralDecomposition& decomp,
                                     std::span<const double> t_over_tau,
                                     double tau);

}  // namespace bhdimer
