#include "bhdimer/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bhdimer/entanglement.hpp"
#include "bhdimer/error.hpp"

namespace bhdimer {

namespace {

using std::numbers::pi;

void require_tau(const RegimeLimit& limit) {
  if (!(limit.tau_ref > 0.0))
    throw Error(ErrorCode::InvalidArgument, "tau_ref must be positive");
}

double safe_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

}  // namespace

const char* to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::Fast: return "fast";
    case FamilyKind::Slow: return "slow";
    case FamilyKind::EquallyWeighted: return "ew";
  }
  return "unknown";
}

const char* to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::StrongJ: return "strong-J";
    case Regime::StrongK: return "strong-K";
  }
  return "unknown";
}

EnergyDistribution family_distribution(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Fast: return EnergyDistribution({0.5, 0.0, 0.5});
    case FamilyKind::Slow: return EnergyDistribution({0.5, 0.5, 0.0});
    case FamilyKind::EquallyWeighted:
      return EnergyDistribution({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

double characteristic_time(FamilyKind kind, const TransitionFrequencies& f) {
  if (!(f.w21 > 0.0 && f.w32 > 0.0 && f.w31 > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "transition frequencies must be positive");
  }
  switch (kind) {
    case FamilyKind::Fast: return pi / f.w31;
    case FamilyKind::Slow: return pi / f.w21;
    case FamilyKind::EquallyWeighted: return 4.0 * pi / (3.0 * f.w31);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

double limit_concurrence(const RegimeLimit& limit, double t) {
  require_tau(limit);
  const double x = t / limit.tau_ref;
  switch (limit.kind) {
    case FamilyKind::Fast:
      if (limit.regime == Regime::StrongJ) {
        const double c = std::cos(pi * x / 2.0);
        const double s = std::sin(pi * x / 2.0);
        return safe_sqrt(1.5 * (1.0 - 0.5 * (c * c * c * c + 2.0 * s * s * s * s)));
      }
      return safe_sqrt(1.5 * (1.0 - 0.25 * (3.0 + std::cos(2.0 * pi * x))));
    case FamilyKind::Slow:
      if (limit.regime == Regime::StrongJ) {
        return safe_sqrt(1.5 * (1.0 - (7.5 + 2.0 * std::cos(2.0 * pi * x)) / 16.0));
      }
      // Populations (1/4, 1/2, 1/4) for all t.
      return std::sqrt(15.0) / 4.0;
    case FamilyKind::EquallyWeighted:
      if (limit.regime == Regime::StrongJ) {
        return safe_sqrt(1.5 - (8.0 * std::cos(4.0 * pi * x / 3.0) +
                                3.0 * std::cos(8.0 * pi * x / 3.0) + 23.0) /
                                   24.0);
      }
      return safe_sqrt(1.5 - (4.0 + std::cos(8.0 * pi * x / 3.0)) / 6.0);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

QutritState limit_state(const RegimeLimit& limit, double t) {
  require_tau(limit);
  const double x = t / limit.tau_ref;
  const Complex i(0.0, 1.0);
  const double r2 = std::numbers::sqrt2;
  Amplitudes a{};
  switch (limit.kind) {
    case FamilyKind::Fast: {
      const double c = std::cos(pi * x / 2.0);
      const double s = std::sin(pi * x / 2.0);
      if (limit.regime == Regime::StrongJ) {
        a = {c / r2, i * s, c / r2};
      } else {
        a = {s, 0.0, -i * c};
      }
      break;
    }
    case FamilyKind::Slow: {
      const Complex ph = std::polar(1.0, -pi * x);
      if (limit.regime == Regime::StrongJ) {
        a = {0.5 * (1.0 / r2 - ph), 0.5, 0.5 * (1.0 / r2 + ph)};
      } else {
        a = {0.5, ph / r2, 0.5};
      }
      break;
    }
    case FamilyKind::EquallyWeighted: {
      const double th = 2.0 * pi * x / 3.0;
      const double c = std::cos(th);
      const double s = std::sin(th);
      const double n = 1.0 / std::sqrt(3.0);
      if (limit.regime == Regime::StrongJ) {
        a = {n * (c - 1.0 / r2), n * i * r2 * s, n * (c + 1.0 / r2)};
      } else {
        a = {n * i * r2 * s, n, n * r2 * c};
      }
      break;
    }
  }
  return QutritState(a, Basis::Fock);
}

HamiltonianParams regime_params(Regime regime, double eps1, double amp) {
  if (!(amp > 0.0))
    throw Error(ErrorCode::InvalidArgument, "tunneling amplitude must be positive");
  HamiltonianParams p;
  p.eps1 = eps1;
  if (regime == Regime::StrongJ) {
    p.J = amp;
    p.K = 0.0;
  } else {
    p.J = eps1;
    p.K = amp;
  }
  return p;
}

double regime_deviation(FamilyKind kind, Regime regime, double eps1, double amp,
                        std::span<const double> t_over_tau) {
  const SpectralDecomposition d =
      decompose(build_extended_matrix(regime_params(regime, eps1, amp)));
  const double tau = characteristic_time(kind, d.freqs);
  const ConcurrenceSeries s =
      concurrence_series(family_distribution(kind), d, t_over_tau, tau);
  const RegimeLimit limit{kind, regime, tau};
  double worst = 0.0;
  for (std::size_t j = 0; j < s.values.size(); ++j) {
    const double c = limit_concurrence(limit, t_over_tau[j] * tau);
    worst = std::max(worst, std::abs(s.values[j] - c));
  }
  return worst;
}

}  // namespace bhdimer
