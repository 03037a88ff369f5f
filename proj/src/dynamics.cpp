#include "bhdimer/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bhdimer/error.hpp"

namespace bhdimer {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_basis(const QutritState& s, Basis expected, const char* what) {
  if (s.basis() != expected) throw Error(ErrorCode::InvalidArgument, what);
}

ComplexMatrix3 identity() {
  ComplexMatrix3 m{};
  for (int n = 0; n < 3; ++n) m[n][n] = 1.0;
  return m;
}

ComplexMatrix3 multiply(const ComplexMatrix3& a, const ComplexMatrix3& b) {
  ComplexMatrix3 c{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

double max_abs(const ComplexMatrix3& m) {
  double out = 0.0;
  for (const auto& row : m)
    for (const auto& x : row) out = std::max(out, std::abs(x));
  return out;
}

}  // namespace

EnergyDistribution::EnergyDistribution(const std::array<double, 3>& r,
                                       const std::array<double, 3>& theta)
    : r_(r), theta_(theta) {
  double sum = 0.0;
  for (double& x : r_) {
    if (!std::isfinite(x) || x < -kNormTol) {
      throw Error(ErrorCode::InvalidDistribution,
                  "energy weights must be non-negative");
    }
    x = std::max(x, 0.0);
    sum += x;
  }
  if (std::abs(sum - 1.0) > kNormTol) {
    throw Error(ErrorCode::InvalidDistribution,
                "energy weights must sum to 1");
  }
  for (double& th : theta_) {
    if (!std::isfinite(th))
      throw Error(ErrorCode::InvalidDistribution, "phase is not finite");
    th = std::fmod(th, kTwoPi);
    if (th < 0.0) th += kTwoPi;
    if (th >= kTwoPi) th = 0.0;
  }
}

QutritState::QutritState(const Amplitudes& amps, Basis basis)
    : amps_(amps), basis_(basis) {
  if (!(std::abs(norm() - 1.0) <= kNormTol)) {
    throw Error(ErrorCode::InvalidArgument, "state is not normalized");
  }
}

double QutritState::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

QutritState prepare_state(const EnergyDistribution& dist) {
  Amplitudes a{};
  for (int i = 0; i < 3; ++i)
    a[i] = std::polar(std::sqrt(dist.r()[i]), dist.theta()[i]);
  return QutritState(a, Basis::Energy);
}

QutritState evolve(const QutritState& state, const Energies& energies,
                   double t) {
  require_basis(state, Basis::Energy, "evolve expects an energy-basis state");
  Amplitudes a = state.amps();
  for (int i = 0; i < 3; ++i) a[i] *= std::polar(1.0, -energies[i] * t);
  return QutritState(a, Basis::Energy);
}

QutritState to_fock(const QutritState& state, const Eigenvectors& eigvecs) {
  require_basis(state, Basis::Energy, "to_fock expects an energy-basis state");
  Amplitudes f{};
  for (int n = 0; n < 3; ++n)
    for (int i = 0; i < 3; ++i) f[n] += state.amps()[i] * eigvecs[i][n];
  return QutritState(f, Basis::Fock);
}

QutritState to_energy(const QutritState& state, const Eigenvectors& eigvecs) {
  require_basis(state, Basis::Fock, "to_energy expects a Fock-basis state");
  Amplitudes e{};
  for (int i = 0; i < 3; ++i)
    for (int n = 0; n < 3; ++n) e[i] += eigvecs[i][n] * state.amps()[n];
  return QutritState(e, Basis::Energy);
}

Populations populations(const QutritState& state) {
  require_basis(state, Basis::Fock, "populations expect a Fock-basis state");
  Populations p;
  for (int n = 0; n < 3; ++n) p.R[n] = std::norm(state.amps()[n]);
  return p;
}

Complex survival_amplitude(const EnergyDistribution& dist,
                           const Energies& energies, double t) {
  Complex s = 0.0;
  for (int i = 0; i < 3; ++i) s += dist.r()[i] * std::polar(1.0, -energies[i] * t);
  return s;
}

std::optional<double> find_orthogonality_time(const EnergyDistribution& dist,
                                              const Energies& energies,
                                              double t_max, double tol) {
  if (!(t_max > 0.0) || !(tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "t_max and tol must be positive");
  }
  const auto modulus = [&](double t) {
    return std::abs(survival_amplitude(dist, energies, t));
  };
  const double lo_e = std::min({energies[0], energies[1], energies[2]});
  const double hi_e = std::max({energies[0], energies[1], energies[2]});
  const double w31 = hi_e - lo_e;
  const double step =
      w31 > 0.0 ? std::min(0.01, kTwoPi / (100.0 * w31)) : 0.01;

  // |d/dt A(t) e^{i c t}| <= sum r_i |E_i - c|, so a sample further than
  // lipschitz * step above tol cannot hide a zero between its neighbours.
  const double mid = 0.5 * (lo_e + hi_e);
  double lipschitz = 0.0;
  for (int i = 0; i < 3; ++i) lipschitz += dist.r()[i] * std::abs(energies[i] - mid);

  const auto n_steps = static_cast<long long>(std::ceil(t_max / step));
  const auto time_at = [&](long long j) {
    return std::min(static_cast<double>(j) * step, t_max);
  };

  double prev = modulus(0.0);
  double cur = modulus(time_at(1));
  for (long long j = 1; j <= n_steps; ++j) {
    const double next = j < n_steps ? modulus(time_at(j + 1)) : cur + 1.0;
    if (cur <= prev && cur <= next && cur - lipschitz * step < tol) {
      // Golden-section search for the modulus minimum in the bracket.
      double a = time_at(j - 1);
      double b = j < n_steps ? time_at(j + 1) : t_max;
      const double g = (std::sqrt(5.0) - 1.0) / 2.0;
      double x1 = b - g * (b - a);
      double x2 = a + g * (b - a);
      double f1 = modulus(x1);
      double f2 = modulus(x2);
      for (int it = 0; it < 200 && (b - a) > 4e-16 * b; ++it) {
        if (f1 < f2) {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - g * (b - a);
          f1 = modulus(x1);
        } else {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + g * (b - a);
          f2 = modulus(x2);
        }
      }
      const double t_min = f1 < f2 ? x1 : x2;
      const double f_min = std::min(f1, f2);
      if (f_min < tol && t_min > 0.0 && t_min <= t_max) return t_min;
    }
    prev = cur;
    cur = next;
  }
  return std::nullopt;
}

ComplexMatrix3 propagator_oracle(const SymmetricMatrix3& m, double t) {
  // X = -i M t, scaled by 2^-s so that ||X||_inf <= 1/2.
  ComplexMatrix3 x{};
  double row_max = 0.0;
  for (int i = 0; i < 3; ++i) {
    double row = 0.0;
    for (int j = 0; j < 3; ++j) {
      x[i][j] = Complex(0.0, -m(i, j) * t);
      row += std::abs(m(i, j) * t);
    }
    row_max = std::max(row_max, row);
  }
  int squarings = 0;
  while (row_max > 0.5) {
    row_max /= 2.0;
    ++squarings;
  }
  const double factor = std::ldexp(1.0, -squarings);
  for (auto& row : x)
    for (auto& v : row) v *= factor;

  ComplexMatrix3 u = identity();
  ComplexMatrix3 term = identity();
  for (int k = 1; k < 64; ++k) {
    term = multiply(term, x);
    for (auto& row : term)
      for (auto& v : row) v /= static_cast<double>(k);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) u[i][j] += term[i][j];
    if (max_abs(term) < 1e-17) break;
  }
  for (int s = 0; s < squarings; ++s) u = multiply(u, u);
  return u;
}

QutritState apply_propagator(const ComplexMatrix3& u, const QutritState& state) {
  require_basis(state, Basis::Fock, "apply_propagator expects a Fock-basis state");
  Amplitudes out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += u[i][j] * state.amps()[j];
  return QutritState(out, Basis::Fock);
}

OccupationStats mode_occupation_stats(const QutritState& state) {
  const Populations p = populations(state);
  OccupationStats s;
  double second = 0.0;
  for (int n = 0; n < 3; ++n) {
    s.mean += n * p.R[n];
    second += n * n * p.R[n];
  }
  s.variance = second - s.mean * s.mean;
  return s;
}

BellAmplitudes bell_decomposition(const QutritState& state) {
  require_basis(state, Basis::Fock, "bell_decomposition expects a Fock state");
  const auto& a = state.amps();
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  return {(a[0] + a[2]) * inv_sqrt2, (a[0] - a[2]) * inv_sqrt2, a[1]};
}

}  // namespace bhdimer
