#include "bhdimer/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bhdimer/error.hpp"

namespace bhdimer {

namespace {

constexpr double kSymmetryRelTol = 1e-12;

double max_magnitude(const RawCouplings::OneBody& one,
                     const RawCouplings::TwoBody& two) {
  double m = 0.0;
  for (const auto& row : one)
    for (double x : row) m = std::max(m, std::abs(x));
  for (const auto& a : two)
    for (const auto& b : a)
      for (const auto& c : b)
        for (double x : c) m = std::max(m, std::abs(x));
  return m;
}

bool close(double a, double b, double scale) {
  return std::abs(a - b) <= kSymmetryRelTol * scale;
}

}  // namespace

std::size_t SymmetricMatrix3::index(int n, int m) {
  if (n < 0 || n > 2 || m < 0 || m > 2)
    throw Error(ErrorCode::InvalidArgument, "matrix index out of range");
  if (n > m) std::swap(n, m);
  // Upper-triangle row-major: (0,0) (0,1) (0,2) (1,1) (1,2) (2,2)
  static constexpr std::size_t offset[3] = {0, 3, 5};
  return offset[n] + static_cast<std::size_t>(m - n);
}

double SymmetricMatrix3::determinant() const {
  const auto& h = *this;
  return h(0, 0) * (h(1, 1) * h(2, 2) - h(1, 2) * h(1, 2)) -
         h(0, 1) * (h(0, 1) * h(2, 2) - h(1, 2) * h(0, 2)) +
         h(0, 2) * (h(0, 1) * h(1, 2) - h(1, 1) * h(0, 2));
}

double SymmetricMatrix3::max_abs() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::abs(x));
  return m;
}

RawCouplings::RawCouplings(const OneBody& one, const TwoBody& two)
    : one_(one), two_(two) {
  const double scale = max_magnitude(one, two);
  if (!close(one[0][1], one[1][0], scale)) {
    throw Error(ErrorCode::SymmetryViolation,
                "one-body tensor is not symmetric: eps1[0][1] != eps1[1][0]");
  }
  for (int l = 0; l < 2; ++l)
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n)
        for (int e = 0; e < 2; ++e) {
          if (!close(two[l][m][n][e], two[e][n][m][l], scale)) {
            std::ostringstream os;
            os << "two-body tensor violates Hermiticity at (" << l << m << n
               << e << ")";
            throw Error(ErrorCode::SymmetryViolation, os.str());
          }
        }
}

RawCouplings RawCouplings::embed(const HamiltonianParams& p) {
  OneBody one{};
  TwoBody two{};
  one[0][0] = p.eps0;
  one[1][1] = p.eps1;
  one[0][1] = one[1][0] = -p.J;
  two[0][0][0][0] = two[1][1][1][1] = p.U;
  two[1][1][0][0] = two[0][0][1][1] = -p.K;
  two[1][0][0][1] = p.eps01;
  return RawCouplings(one, two);
}

HamiltonianParams reduce_couplings(const RawCouplings& raw) {
  const auto& e1 = raw.one_body();
  const auto& e2 = raw.two_body();
  const double scale = max_magnitude(e1, e2);

  const double u0 = e2[0][0][0][0];
  const double u1 = e2[1][1][1][1];
  if (!close(u0, u1, scale)) {
    throw Error(ErrorCode::SiteAsymmetry,
                "on-site interactions differ between sites (U0 != U1)");
  }
  const double j1 = -e1[0][1];
  const double j2_site0 = -(e2[0][0][0][1] + e2[0][0][1][0]);
  const double j2_site1 = -(e2[1][1][1][0] + e2[1][1][0][1]);
  if (!close(j2_site0, j2_site1, scale)) {
    throw Error(ErrorCode::SiteAsymmetry,
                "assisted tunneling differs between sites (J0 != J1)");
  }

  HamiltonianParams p;
  p.eps0 = e1[0][0];
  p.eps1 = e1[1][1];
  p.eps01 = e2[1][0][0][1] + e2[1][0][1][0] + e2[0][1][0][1] + e2[0][1][1][0];
  p.U = u0;
  p.J = j1 + j2_site0;
  p.K = -e2[1][1][0][0];
  return p;
}

SymmetricMatrix3 build_extended_matrix(const HamiltonianParams& p) {
  const double hop = -std::sqrt(2.0) * p.J;
  return {2.0 * (p.eps0 + p.U), hop, -2.0 * p.K,
          p.eps0 + p.eps1 + p.eps01, hop, 2.0 * (p.eps1 + p.U)};
}

SymmetricMatrix3 build_tunneling_matrix(double eps1, double J, double K) {
  HamiltonianParams p;
  p.eps1 = eps1;
  p.J = J;
  p.K = K;
  return build_extended_matrix(p);
}

}  // namespace bhdimer
