#pragma once

#include <span>

#include "bhdimer/dynamics.hpp"
#include "bhdimer/hamiltonian.hpp"
#include "bhdimer/spectral.hpp"

namespace bhdimer {

enum class FamilyKind { Fast, Slow, EquallyWeighted };

/// StrongJ: K = 0, J >> eps1. StrongK: J = eps1, K >> J.
enum class Regime { StrongJ, StrongK };

const char* to_string(FamilyKind kind) noexcept;
const char* to_string(Regime regime) noexcept;

struct RegimeLimit {
  FamilyKind kind;
  Regime regime;
  double tau_ref;  // tau_fast, tau_slow or tau* (> 0)
};

EnergyDistribution family_distribution(FamilyKind kind);

/// Fast: pi / w31, Slow: pi / w21, EquallyWeighted: tau* = 4 pi / (3 w31).
double characteristic_time(FamilyKind kind, const TransitionFrequencies& freqs);

/// Asymptotic concurrence of a family in a strong-tunneling regime.
double limit_concurrence(const RegimeLimit& limit, double t);

/// Asymptotic Fock-basis state. The global phase is fixed so that the
/// amplitude on |0> is real at t = 0 for the strong-J forms.
QutritState limit_state(const RegimeLimit& limit, double t);

/// Hamiltonian parameters used for a regime at the given amplitude.
HamiltonianParams regime_params(Regime regime, double eps1, double amp);

/// Max over the grid (in units of the exact characteristic time) of
/// |C_numeric - C_limit|.
double regime_deviation(FamilyKind kind, Regime regime, double eps1, double amp,
                        std::span<const double> t_over_tau);

}  // namespace bhdimer
