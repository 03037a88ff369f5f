#include "bhdimer/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bhdimer/error.hpp"

namespace bhdimer {

namespace {

constexpr double kDegeneracyTol = 1e-14;
constexpr double kBranchTol = 1e-14;
constexpr double kBranchResidualTol = 1e-11;
constexpr double kSignTol = 1e-12;
constexpr double kFrequencyTol = 1e-10;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

double norm(const Vector3& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

Vector3 cross(const Vector3& a, const Vector3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double residual(const SymmetricMatrix3& m, const Vector3& v, double energy) {
  double r2 = 0.0;
  for (int n = 0; n < 3; ++n) {
    double row = -energy * v[n];
    for (int k = 0; k < 3; ++k) row += m(n, k) * v[k];
    r2 += row * row;
  }
  return std::sqrt(r2);
}

// Fixes the overall sign: <2|E_k> > 0, falling back to the largest entry
// (lowest index on ties) when that component vanishes.
Vector3 canonical_sign(Vector3 v) {
  double sign = 1.0;
  if (std::abs(v[2]) > kSignTol) {
    sign = v[2] < 0.0 ? -1.0 : 1.0;
  } else {
    const double top =
        std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
    for (int n = 0; n < 3; ++n) {
      if (std::abs(v[n]) >= top - kSignTol) {
        sign = v[n] < 0.0 ? -1.0 : 1.0;
        break;
      }
    }
  }
  for (double& x : v) x *= sign;
  return v;
}

void require_nondegenerate(double p, double q, double scale) {
  const double d = p * p * p + q * q;
  const double s3 = scale * scale * scale;
  if (!(scale > 0.0) || !(d < -kDegeneracyTol * s3 * s3)) {
    throw Error(ErrorCode::DegenerateSpectrum,
                "spectrum is degenerate (discriminant p^3 + q^2 >= 0)");
  }
}

}  // namespace

CubicCoefficients characteristic_coefficients(const SymmetricMatrix3& m) {
  const double minor1 = m(0, 0) * m(1, 1) - m(0, 1) * m(0, 1);
  const double minor2 = m(1, 1) * m(2, 2) - m(1, 2) * m(1, 2);
  const double minor3 = m(0, 0) * m(2, 2) - m(0, 2) * m(0, 2);
  return {-m.trace(), minor1 + minor2 + minor3, -m.determinant()};
}

ClosedFormRoots closed_form_eigenvalues(const SymmetricMatrix3& m) {
  // p and q are shift invariant, so evaluate them on the traceless part
  // (alpha = 0) to avoid cancellation when the trace dominates.
  const double shift = m.trace() / 3.0;
  SymmetricMatrix3 b = m;
  for (int n = 0; n < 3; ++n) b.set(n, n, m(n, n) - shift);
  const CubicCoefficients c = characteristic_coefficients(b);
  const double p = c.beta / 3.0;
  const double q = -c.gamma / 2.0;
  require_nondegenerate(p, q, m.max_abs());

  const double abs_p = std::abs(p);
  const double phi = std::acos(clamp_unit(q / std::pow(abs_p, 1.5)));
  const double radius = 2.0 * std::sqrt(abs_p);

  ClosedFormRoots roots;
  for (int k = 1; k <= 3; ++k) {
    roots.energies[k - 1] =
        shift + radius * std::cos((phi + 2.0 * std::numbers::pi * k) / 3.0);
  }
  // Ordered for phi in [0, pi]; sort anyway to absorb rounding at the edges.
  std::sort(roots.energies.begin(), roots.energies.end());
  roots.p = p;
  roots.q = q;
  roots.phi = phi;
  return roots;
}

Energies tunneling_spectrum(double eps1, double J, double K) {
  const double eps = std::sqrt(eps1 * eps1 + 4.0 * (J * J + K * K));
  const double scale = std::max(
      {2.0 * std::abs(eps1), std::sqrt(2.0) * std::abs(J), 2.0 * std::abs(K)});
  Energies e{};
  if (J * K == 0.0) {
    if (!(eps > 0.0)) {
      throw Error(ErrorCode::DegenerateSpectrum,
                  "spectrum is degenerate (eps1 = J = K = 0)");
    }
    for (int k = 1; k <= 3; ++k) e[k - 1] = eps1 + (k - 2) * eps;
    return e;
  }
  const double cos_phi = -12.0 * std::sqrt(3.0) * J * J * K / (eps * eps * eps);
  // Same discriminant test as the general solver: p = -eps^2/3,
  // p^3 + q^2 = |p|^3 (cos^2 phi - 1).
  const double abs_p = eps * eps / 3.0;
  require_nondegenerate(-abs_p, cos_phi * std::pow(abs_p, 1.5), scale);
  const double phi = std::acos(clamp_unit(cos_phi));
  for (int k = 1; k <= 3; ++k) {
    e[k - 1] = eps1 + 2.0 / std::sqrt(3.0) * eps *
                          std::cos((phi + 2.0 * std::numbers::pi * k) / 3.0);
  }
  std::sort(e.begin(), e.end());
  return e;
}

std::optional<Vector3> fock_projection(const SymmetricMatrix3& m,
                                       double energy) {
  const double scale = std::max(m.max_abs(), std::abs(energy));
  const double h01 = m(0, 1);
  const double h02 = m(0, 2);
  const double h12 = m(1, 2);
  const double d00 = m(0, 0) - energy;
  const double d11 = m(1, 1) - energy;
  const double d22 = m(2, 2) - energy;

  const double den = h01 * h02 - h12 * d00;
  if (std::abs(h01) <= kBranchTol * scale ||
      std::abs(den) <= kBranchTol * scale * scale) {
    return std::nullopt;
  }
  const double a = (d00 * d22 - h02 * h02) / den;
  const double h01sq = h01 * h01;
  const double bracket = (h01sq + d11 * d11) / h01sq * a * a +
                         2.0 * h12 * d11 / h01sq * a +
                         (h01sq + h12 * h12) / h01sq;
  if (!(bracket > 0.0) || !std::isfinite(bracket)) return std::nullopt;

  const double v2 = 1.0 / std::sqrt(bracket);
  const Vector3 v{-(d11 / h01 * a + h12 / h01) * v2, a * v2, v2};
  if (!std::isfinite(v[0]) || !std::isfinite(v[1])) return std::nullopt;
  return v;
}

Vector3 null_space_vector(const SymmetricMatrix3& m, double energy) {
  std::array<Vector3, 3> rows{};
  for (int n = 0; n < 3; ++n)
    for (int k = 0; k < 3; ++k) rows[n][k] = m(n, k) - (n == k ? energy : 0.0);

  const std::array<Vector3, 3> candidates{cross(rows[0], rows[1]),
                                          cross(rows[0], rows[2]),
                                          cross(rows[1], rows[2])};
  const Vector3* best = &candidates[0];
  for (const auto& c : candidates)
    if (norm(c) > norm(*best)) best = &c;

  const double len = norm(*best);
  if (!(len > 0.0)) {
    throw Error(ErrorCode::DegenerateSpectrum,
                "eigenvalue has a multi-dimensional eigenspace");
  }
  return {(*best)[0] / len, (*best)[1] / len, (*best)[2] / len};
}

Eigenvectors eigenvectors(const SymmetricMatrix3& m, const Energies& energies) {
  const double bound = kBranchResidualTol * std::max(m.max_abs(), 1e-300);
  Eigenvectors out{};
  for (int k = 0; k < 3; ++k) {
    std::optional<Vector3> v = fock_projection(m, energies[k]);
    if (!v || residual(m, *v, energies[k]) > bound) {
      v = null_space_vector(m, energies[k]);
    }
    out[k] = canonical_sign(*v);
  }
  // Nearly-degenerate pairs leave O(1e-12) overlaps; one step of symmetric
  // orthonormalization, V <- (3/2 I - 1/2 V V^T) V, squares that error away
  // without changing signs.
  std::array<std::array<double, 3>, 3> gram{};
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      for (int n = 0; n < 3; ++n) gram[k][l] += out[k][n] * out[l][n];
  Eigenvectors refined{};
  for (int k = 0; k < 3; ++k)
    for (int n = 0; n < 3; ++n)
      for (int l = 0; l < 3; ++l)
        refined[k][n] += ((k == l ? 1.5 : 0.0) - 0.5 * gram[k][l]) * out[l][n];
  return refined;
}

TransitionFrequencies transition_frequencies(const Energies& e) {
  TransitionFrequencies f;
  f.w21 = e[1] - e[0];
  f.w32 = e[2] - e[1];
  f.w31 = f.w32 + f.w21;
  return f;
}

TransitionFrequencies closed_form_frequencies(double p, double phi) {
  const double s = 2.0 * std::sqrt(3.0 * std::abs(p));
  TransitionFrequencies f;
  f.w21 = s * std::sin(phi / 3.0);
  f.w32 = s * std::cos((std::numbers::pi + 2.0 * phi) / 6.0);
  f.w31 = f.w32 + f.w21;
  return f;
}

SpectralDecomposition decompose(const SymmetricMatrix3& m) {
  const ClosedFormRoots roots = closed_form_eigenvalues(m);
  SpectralDecomposition d;
  d.energies = roots.energies;
  d.p = roots.p;
  d.q = roots.q;
  d.phi = roots.phi;
  if (!(d.energies[0] < d.energies[1] && d.energies[1] < d.energies[2])) {
    throw Error(ErrorCode::DegenerateSpectrum,
                "eigenvalues are not strictly ascending");
  }
  d.freqs = transition_frequencies(d.energies);

  const TransitionFrequencies cf = closed_form_frequencies(d.p, d.phi);
  const double tol = kFrequencyTol * std::max(1.0, m.max_abs());
  if (std::abs(cf.w21 - d.freqs.w21) > tol ||
      std::abs(cf.w32 - d.freqs.w32) > tol) {
    throw Error(ErrorCode::Internal,
                "trigonometric transition frequencies disagree with energies");
  }
  d.eigvecs = eigenvectors(m, d.energies);
  return d;
}

}  // namespace bhdimer
