#include "bhdimer/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "bhdimer/dynamics.hpp"
#include "bhdimer/entanglement.hpp"
#include "bhdimer/error.hpp"
#include "bhdimer/families.hpp"
#include "bhdimer/simplex.hpp"
#include "bhdimer/spectral.hpp"

namespace bhdimer {

namespace {

std::string format_max(const char* label, double value, double bound) {
  std::ostringstream os;
  os.precision(3);
  os << label << " = " << std::scientific << value << " (bound " << bound << ")";
  return os.str();
}

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> v;
  for (int i = 0; i < count; ++i)
    v.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  return v;
}

VerifyGroupResult spectral_residuals() {
  double worst = 0.0;
  for (double J : log_grid(0.01, 100.0, 8)) {
    for (double K : log_grid(0.01, 100.0, 8)) {
      const SymmetricMatrix3 m = build_tunneling_matrix(1.0, J, K);
      const SpectralDecomposition d = decompose(m);
      const double scale = m.max_abs();
      for (int k = 0; k < 3; ++k) {
        double res = 0.0;
        for (int n = 0; n < 3; ++n) {
          double row = -d.energies[k] * d.eigvecs[k][n];
          for (int j = 0; j < 3; ++j) row += m(n, j) * d.eigvecs[k][j];
          res = std::max(res, std::abs(row));
        }
        worst = std::max(worst, res / scale / 1e-10);
        for (int l = 0; l < 3; ++l) {
          double dot = 0.0;
          for (int n = 0; n < 3; ++n) dot += d.eigvecs[k][n] * d.eigvecs[l][n];
          worst = std::max(worst, std::abs(dot - (k == l ? 1.0 : 0.0)) / 1e-12);
        }
      }
      const Energies e = tunneling_spectrum(1.0, J, K);
      for (int k = 0; k < 3; ++k) {
        const double rel = std::abs(e[k] - d.energies[k]) /
                           std::max(1.0, std::abs(d.energies[k]));
        worst = std::max(worst, rel / 1e-9);
      }
    }
  }
  return {"spectral-residuals", worst <= 1.0,
          format_max("max normalized violation", worst, 1.0)};
}

VerifyGroupResult route_equivalence(bool inject_sign_error) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> amp(0.0, 100.0);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double J = amp(rng);
    const double K = amp(rng);
    const double t = time(rng);
    std::array<double, 3> w{unit(rng), unit(rng), unit(rng)};
    const double sum = w[0] + w[1] + w[2];
    for (double& x : w) x /= sum;
    const EnergyDistribution dist(w, {phase(rng), phase(rng), phase(rng)});

    const SymmetricMatrix3 m = build_tunneling_matrix(1.0, J, K);
    const SpectralDecomposition d = decompose(m);
    const QutritState initial = prepare_state(dist);
    const QutritState spectral = to_fock(evolve(initial, d.energies, t), d.eigvecs);

    SymmetricMatrix3 oracle_m = m;
    if (inject_sign_error) oracle_m.set(0, 2, -m(0, 2));
    const ComplexMatrix3 u = propagator_oracle(oracle_m, t);
    Amplitudes out{};
    const QutritState initial_fock = to_fock(initial, d.eigvecs);
    const Amplitudes& in = initial_fock.amps();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[i] += u[i][j] * in[j];
    for (int n = 0; n < 3; ++n)
      worst = std::max(worst, std::abs(out[n] - spectral.amps()[n]));
  }
  return {"route-equivalence", worst <= 1e-10,
          format_max("max amplitude deviation", worst, 1e-10)};
}

VerifyGroupResult limit_regressions() {
  std::vector<double> fast_grid, ew_grid;
  for (int j = 0; j < 401; ++j) {
    fast_grid.push_back(4.0 * j / 400.0);
    ew_grid.push_back(3.0 * j / 400.0);
  }
  double worst = 0.0;
  for (FamilyKind kind :
       {FamilyKind::Fast, FamilyKind::Slow, FamilyKind::EquallyWeighted}) {
    const auto& grid = kind == FamilyKind::EquallyWeighted ? ew_grid : fast_grid;
    for (Regime regime : {Regime::StrongJ, Regime::StrongK}) {
      const double amp = regime == Regime::StrongJ ? 1e3 : 1e4;
      worst = std::max(worst, regime_deviation(kind, regime, 1.0, amp, grid) / 2e-3);
      for (double x : grid) {
        const RegimeLimit lim{kind, regime, 1.0};
        const double c = concurrence(populations(limit_state(lim, x)));
        worst = std::max(worst, std::abs(c - limit_concurrence(lim, x)) / 1e-12);
      }
    }
  }
  return {"limit-regressions", worst < 1.0,
          format_max("max normalized deviation", worst, 1.0)};
}

VerifyGroupResult simplex_thresholds() {
  // C >= sqrt3/2 holds exactly on the disk sum (r_i - 1/3)^2 <= 1/6, which
  // circumscribes the central triangle. Every inside or boundary point lies
  // in it; outside points near the triangle edges lie in it too.
  const double threshold = std::sqrt(3.0) / 2.0;
  bool ok = true;
  for (const SimplexPoint& pt : sample_simplex(200)) {
    double spread = 0.0;
    for (double x : pt.r) spread += (x - 1.0 / 3.0) * (x - 1.0 / 3.0);
    const bool in_disk = spread <= 1.0 / 6.0 + 1e-12;
    if (pt.region != Region::OutsideDelta2)
      ok = ok && in_disk && pt.concurrence >= threshold - 1e-12;
    if (pt.concurrence < threshold - 1e-12)
      ok = ok && pt.region == Region::OutsideDelta2 && !in_disk;
    ok = ok && (in_disk == (pt.concurrence >= threshold - 1e-12));
  }
  const auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
  ok = ok && near(diagonal_concurrence({0.5, 0.5, 0.0}), threshold);
  ok = ok && near(diagonal_concurrence({0.5, 0.25, 0.25}), std::sqrt(15.0) / 4.0);
  ok = ok && near(diagonal_concurrence({1.0 / 3, 1.0 / 3, 1.0 / 3}), 1.0);
  ok = ok && near(diagonal_concurrence({1.0, 0.0, 0.0}), 0.0);
  return {"simplex-thresholds", ok,
          ok ? "threshold bounds hold on n=200 grid" : "threshold bound violated"};
}

VerifyGroupResult orthogonality_times() {
  const SpectralDecomposition d = decompose(build_tunneling_matrix(1.0, 1.0, 0.0));
  double worst = 0.0;
  const double pi = std::numbers::pi;
  const std::pair<FamilyKind, double> cases[] = {
      {FamilyKind::Fast, pi / d.freqs.w31},
      {FamilyKind::Slow, pi / d.freqs.w21},
      {FamilyKind::EquallyWeighted, 2.0 * pi / (3.0 * d.freqs.w21)}};
  for (const auto& [kind, expected] : cases) {
    const auto tau = find_orthogonality_time(family_distribution(kind), d.energies, 10.0);
    if (!tau) return {"orthogonality-times", false, "no orthogonality time found"};
    worst = std::max(worst, std::abs(*tau / expected - 1.0));
  }
  return {"orthogonality-times", worst <= 1e-8,
          format_max("max relative error", worst, 1e-8)};
}

VerifyGroupResult expected_errors() {
  try {
    (void)decompose(build_tunneling_matrix(0.0, 0.0, 0.0));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateSpectrum)
      return {"expected-errors", true, "degenerate input rejected as expected"};
    return {"expected-errors", false, std::string("wrong error: ") + e.what()};
  }
  return {"expected-errors", false, "degenerate input was accepted"};
}

template <typename F>
VerifyGroupResult guarded(const char* name, F&& run) {
  try {
    return run();
  } catch (const std::exception& e) {
    return {name, false, std::string("unexpected exception: ") + e.what()};
  }
}

}  // namespace

std::vector<VerifyGroupResult> run_verification(const VerifyOptions& options) {
  return {
      guarded("spectral-residuals", spectral_residuals),
      guarded("route-equivalence",
              [&] { return route_equivalence(options.inject_h02_sign_error); }),
      guarded("limit-regressions", limit_regressions),
      guarded("simplex-thresholds", simplex_thresholds),
      guarded("orthogonality-times", orthogonality_times),
      guarded("expected-errors", expected_errors),
  };
}

}  // namespace bhdimer
