#include "bhdimer/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "bhdimer/error.hpp"

namespace bhdimer {

namespace {

// C = sqrt(d/(d-1) * S_L) with d = 3; negative rounding under the radical
// is clipped.
double concurrence_from_entropy(double linear_entropy) {
  return std::clamp(std::sqrt(std::max(0.0, 1.5 * linear_entropy)), 0.0, 1.0);
}

}  // namespace

double linear_entropy(const Populations& pops) {
  double sum_sq = 0.0;
  for (double r : pops.R) sum_sq += r * r;
  return 1.0 - sum_sq;
}

double concurrence(const Populations& pops) {
  return concurrence_from_entropy(linear_entropy(pops));
}

double diagonal_concurrence(const std::array<double, 3>& r) {
  return concurrence(Populations{r});
}

double diagonal_concurrence(const EnergyDistribution& dist) {
  return diagonal_concurrence(dist.r());
}

ConcurrenceSeries concurrence_series(const EnergyDistribution& dist,
                                     const SpectralDecomposition& decomp,
                                     std::span<const double> grid) {
  ConcurrenceSeries s;
  s.times.assign(grid.begin(), grid.end());
  s.values.reserve(grid.size());
  const QutritState initial = prepare_state(dist);
  for (double t : grid) {
    const QutritState fock =
        to_fock(evolve(initial, decomp.energies, t), decomp.eigvecs);
    s.values.push_back(concurrence(populations(fock)));
  }
  return s;
}

ConcurrenceSeries concurrence_series(const EnergyDistribution& dist,
                                     const SpectralDecomposition& decomp,
                                     std::span<const double> t_over_tau,
                                     double tau) {
  if (!(tau > 0.0))
    throw Error(ErrorCode::InvalidArgument, "tau must be positive");
  std::vector<double> absolute;
  absolute.reserve(t_over_tau.size());
  for (double x : t_over_tau) absolute.push_back(x * tau);
  ConcurrenceSeries s = concurrence_series(dist, decomp, absolute);
  s.times.assign(t_over_tau.begin(), t_over_tau.end());
  s.time_unit = TimeUnit::OverTau;
  s.tau = tau;
  return s;
}

}  // namespace bhdimer
