// Test-only reference computations, independent of the library's
// closed-form routes.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "bhdimer/dynamics.hpp"
#include "bhdimer/hamiltonian.hpp"

namespace oracle {

using Mat3 = std::array<std::array<double, 3>, 3>;

inline Mat3 dense(const bhdimer::SymmetricMatrix3& m) {
  Mat3 a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = m(i, j);
  return a;
}

/// Determinant by the Leibniz permutation sum.
inline double leibniz_det(const Mat3& a) {
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  static constexpr int signs[6] = {1, -1, -1, 1, 1, -1};
  double det = 0.0;
  for (int p = 0; p < 6; ++p)
    det += signs[p] * a[0][perms[p][0]] * a[1][perms[p][1]] * a[2][perms[p][2]];
  return det;
}

struct Eigen {
  std::array<double, 3> values;
  Mat3 vectors;  // vectors[k] is the k-th eigenvector
};

/// Cyclic Jacobi rotations until the off-diagonal mass vanishes.
inline Eigen jacobi(const bhdimer::SymmetricMatrix3& m) {
  Mat3 a = dense(m);
  Mat3 v{};
  for (int i = 0; i < 3; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-300) break;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a[x][x] < a[y][y]; });
  Eigen out{};
  for (int k = 0; k < 3; ++k) {
    out.values[k] = a[order[k]][order[k]];
    for (int n = 0; n < 3; ++n) out.vectors[k][n] = v[n][order[k]];
  }
  return out;
}

/// R_n(t) as the explicit double sum over energy levels.
inline std::array<double, 3> populations_double_sum(
    const bhdimer::EnergyDistribution& dist, const bhdimer::Energies& e,
    const bhdimer::Eigenvectors& c, double t) {
  std::array<double, 3> R{};
  for (int n = 0; n < 3; ++n) {
    std::complex<double> acc = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double theta_ij = dist.theta()[i] - dist.theta()[j];
        const double omega_ij = e[i] - e[j];
        acc += c[i][n] * c[j][n] * std::sqrt(dist.r()[i] * dist.r()[j]) *
               std::polar(1.0, -theta_ij) * std::polar(1.0, omega_ij * t);
      }
    }
    R[n] = acc.real();
  }
  return R;
}

inline bhdimer::EnergyDistribution random_distribution(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::array<double, 3> r{u(rng), u(rng), u(rng)};
  const double s = r[0] + r[1] + r[2];
  for (double& x : r) x /= s;
  const double two_pi = 2.0 * 3.14159265358979323846;
  return bhdimer::EnergyDistribution(r, {two_pi * u(rng), two_pi * u(rng), two_pi * u(rng)});
}

}  // namespace oracle
