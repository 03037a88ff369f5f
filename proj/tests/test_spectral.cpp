#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bhdimer/error.hpp"
#include "bhdimer/spectral.hpp"
#include "oracles.hpp"

using namespace bhdimer;

namespace {

const double kSqrt5 = std::sqrt(5.0);
const double kSqrt33 = std::sqrt(33.0);

double residual(const SymmetricMatrix3& m, const Vector3& v, double e) {
  double r2 = 0.0;
  for (int n = 0; n < 3; ++n) {
    double row = -e * v[n];
    for (int k = 0; k < 3; ++k) row += m(n, k) * v[k];
    r2 += row * row;
  }
  return std::sqrt(r2);
}

void check_eigensystem(const SymmetricMatrix3& m, const SpectralDecomposition& d) {
  for (int k = 0; k < 3; ++k) {
    CHECK(residual(m, d.eigvecs[k], d.energies[k]) < 1e-10 * m.max_abs());
    for (int l = 0; l < 3; ++l) {
      double dot = 0.0;
      for (int n = 0; n < 3; ++n) dot += d.eigvecs[k][n] * d.eigvecs[l][n];
      CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> v;
  for (int i = 0; i < count; ++i)
    v.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  return v;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("characteristic coefficients") {
    const CubicCoefficients diag = characteristic_coefficients(SymmetricMatrix3::diagonal(0, 1, 2));
    CHECK(diag.alpha == -3.0);
    CHECK(diag.beta == 2.0);
    CHECK(diag.gamma == 0.0);

    const CubicCoefficients zero = characteristic_coefficients(SymmetricMatrix3{});
    CHECK(zero.alpha == 0.0);
    CHECK(zero.beta == 0.0);
    CHECK(zero.gamma == 0.0);

    // Frozen from the Leibniz determinant and explicit minors: (-3, -6, 16).
    const SymmetricMatrix3 m = build_tunneling_matrix(1, 1, 1);
    const CubicCoefficients c = characteristic_coefficients(m);
    CHECK(c.alpha == doctest::Approx(-3.0).epsilon(1e-14));
    CHECK(c.beta == doctest::Approx(-6.0).epsilon(1e-14));
    CHECK(c.gamma == doctest::Approx(16.0).epsilon(1e-14));
    CHECK(c.gamma == doctest::Approx(-oracle::leibniz_det(oracle::dense(m))).epsilon(1e-14));
  }

  TEST_CASE("roots satisfy the characteristic polynomial") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
      const SymmetricMatrix3 m(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
      const CubicCoefficients c = characteristic_coefficients(m);
      const ClosedFormRoots r = closed_form_eigenvalues(m);
      for (double e : r.energies) {
        const double poly = ((e + c.alpha) * e + c.beta) * e + c.gamma;
        CHECK(std::abs(poly) <= 1e-9 * std::max(1.0, std::abs(e * e * e)));
      }
    }
  }

  TEST_CASE("p and q agree with the coefficient formulas") {
    const SymmetricMatrix3 m = build_extended_matrix({0.5, 1, 0.2, 0.3, 0.7, 0.4});
    const CubicCoefficients c = characteristic_coefficients(m);
    const ClosedFormRoots r = closed_form_eigenvalues(m);
    CHECK(r.p == doctest::Approx((3 * c.beta - c.alpha * c.alpha) / 9).epsilon(1e-12));
    CHECK(r.q == doctest::Approx((9 * c.alpha * c.beta - 27 * c.gamma -
                                  2 * c.alpha * c.alpha * c.alpha) / 54)
                     .epsilon(1e-12));
    CHECK(r.p < 0.0);
  }

  TEST_CASE("closed-form eigenvalues: named cases") {
    const ClosedFormRoots diag = closed_form_eigenvalues(SymmetricMatrix3::diagonal(0, 1, 2));
    CHECK(diag.energies[0] == doctest::Approx(0.0));
    CHECK(diag.energies[1] == doctest::Approx(1.0));
    CHECK(diag.energies[2] == doctest::Approx(2.0));

    const ClosedFormRoots j = closed_form_eigenvalues(build_tunneling_matrix(1, 1, 0));
    CHECK(j.energies[0] == doctest::Approx(1 - kSqrt5).epsilon(1e-14));
    CHECK(j.energies[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(j.energies[2] == doctest::Approx(1 + kSqrt5).epsilon(1e-14));

    // Jacobi oracle: (1 - sqrt33)/2, 2, (1 + sqrt33)/2.
    const SymmetricMatrix3 m = build_tunneling_matrix(1, 1, 1);
    const ClosedFormRoots jk = closed_form_eigenvalues(m);
    const oracle::Eigen ref = oracle::jacobi(m);
    const double frozen[3] = {(1 - kSqrt33) / 2, 2.0, (1 + kSqrt33) / 2};
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(jk.energies[k] - frozen[k]) < 1e-10);
      CHECK(std::abs(ref.values[k] - frozen[k]) < 1e-10);
    }
    CHECK(jk.phi == doctest::Approx(std::acos(-12 * std::sqrt(3.0) / 27)).epsilon(1e-12));
    CHECK(jk.phi == doctest::Approx(2.44932).epsilon(1e-5));
  }

  TEST_CASE("degenerate spectra are rejected") {
    for (const SymmetricMatrix3& m :
         {SymmetricMatrix3{}, SymmetricMatrix3::diagonal(1, 1, 2),
          SymmetricMatrix3::diagonal(3, 3, 3)}) {
      try {
        (void)closed_form_eigenvalues(m);
        FAIL("expected DegenerateSpectrum");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateSpectrum);
      }
    }
    // Scale-free threshold: a tiny but well-separated spectrum is accepted.
    const ClosedFormRoots tiny = closed_form_eigenvalues(SymmetricMatrix3::diagonal(0, 1e-5, 2e-5));
    CHECK(tiny.energies[1] == doctest::Approx(1e-5));
  }

  TEST_CASE("tunneling spectrum: equally spaced cases") {
    for (const auto& [J, K] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}}) {
      const Energies e = tunneling_spectrum(1, J, K);
      CHECK(e[0] == doctest::Approx(1 - kSqrt5).epsilon(1e-15));
      CHECK(e[1] == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(e[2] == doctest::Approx(1 + kSqrt5).epsilon(1e-15));
    }
    const Energies e = tunneling_spectrum(1, 1, 1);
    CHECK(e[0] == doctest::Approx((1 - kSqrt33) / 2).epsilon(1e-13));
    CHECK(e[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(e[2] == doctest::Approx((1 + kSqrt33) / 2).epsilon(1e-13));
    CHECK_THROWS_AS(tunneling_spectrum(0, 0, 0), Error);
  }

  TEST_CASE("tunneling spectrum matches the general solver and Jacobi on a grid") {
    for (double J : log_grid(0.01, 100, 20)) {
      for (double K : log_grid(0.01, 100, 20)) {
        const SymmetricMatrix3 m = build_tunneling_matrix(1, J, K);
        const Energies t = tunneling_spectrum(1, J, K);
        const ClosedFormRoots g = closed_form_eigenvalues(m);
        const oracle::Eigen ref = oracle::jacobi(m);
        for (int k = 0; k < 3; ++k) {
          const double scale = std::max(1.0, std::abs(ref.values[k]));
          CHECK(std::abs(t[k] - g.energies[k]) <= 1e-9 * scale);
          CHECK(std::abs(g.energies[k] - ref.values[k]) <= 1e-10 * scale);
        }
      }
    }
  }

  TEST_CASE("J*K = 0 gives an equally spaced spectrum") {
    for (double a : log_grid(0.01, 100, 50)) {
      for (const auto& [J, K] : {std::pair{a, 0.0}, std::pair{0.0, a}}) {
        const Energies e = closed_form_eigenvalues(build_tunneling_matrix(1, J, K)).energies;
        const double eps = std::sqrt(1 + 4 * (J * J + K * K));
        CHECK(std::abs((e[1] - e[0]) - (e[2] - e[1])) <= 1e-10 * eps);
      }
    }
  }

  TEST_CASE("eigenvectors: diagonal matrix gives the standard basis") {
    const Eigenvectors v = eigenvectors(SymmetricMatrix3::diagonal(0, 1, 2), {0, 1, 2});
    for (int k = 0; k < 3; ++k)
      for (int n = 0; n < 3; ++n) CHECK(v[k][n] == doctest::Approx(k == n ? 1.0 : 0.0));
  }

  TEST_CASE("eigenvectors: closed-form branch and fallback") {
    const SymmetricMatrix3 m = build_tunneling_matrix(1, 1, 1);
    const SpectralDecomposition d = decompose(m);
    check_eigensystem(m, d);
    // E_2 = 2 = 2K sits on the excluded branch.
    CHECK_FALSE(fock_projection(m, d.energies[1]).has_value());
    CHECK(fock_projection(m, d.energies[0]).has_value());

    // J = 0: H01 vanishes, every vector comes from the null-space fallback.
    const SymmetricMatrix3 k_only = build_tunneling_matrix(1, 0, 1);
    for (double e : closed_form_eigenvalues(k_only).energies)
      CHECK_FALSE(fock_projection(k_only, e).has_value());
    check_eigensystem(k_only, decompose(k_only));
  }

  TEST_CASE("closed-form branch agrees with the fallback where both exist") {
    const SymmetricMatrix3 m = build_tunneling_matrix(1, 0.8, 0.3);
    for (double e : closed_form_eigenvalues(m).energies) {
      const auto a = fock_projection(m, e);
      REQUIRE(a.has_value());
      const Vector3 b = null_space_vector(m, e);
      double dot = 0.0;
      for (int n = 0; n < 3; ++n) dot += (*a)[n] * b[n];
      CHECK(std::abs(std::abs(dot) - 1.0) < 1e-12);
      CHECK((*a)[2] > 0.0);
    }
  }

  TEST_CASE("sign convention: positive doubly-occupied-site component") {
    // Strong single-particle tunneling: |E1> ~ (1/2, 1/sqrt2, 1/2),
    // |E3> ~ (1/2, -1/sqrt2, 1/2), |E2> ~ (-1/sqrt2, 0, 1/sqrt2).
    const SpectralDecomposition d = decompose(build_tunneling_matrix(1, 1e4, 0));
    CHECK(d.eigvecs[0][1] == doctest::Approx(1 / std::numbers::sqrt2).epsilon(1e-3));
    CHECK(d.eigvecs[2][1] == doctest::Approx(-1 / std::numbers::sqrt2).epsilon(1e-3));
    CHECK(d.eigvecs[1][0] == doctest::Approx(-1 / std::numbers::sqrt2).epsilon(1e-3));
    for (int k = 0; k < 3; ++k) CHECK(d.eigvecs[k][2] > 0.0);
  }

  TEST_CASE("transition frequencies") {
    const TransitionFrequencies f = transition_frequencies({0, 1, 2});
    CHECK(f.w21 == 1.0);
    CHECK(f.w32 == 1.0);
    CHECK(f.w31 == 2.0);

    const TransitionFrequencies g = transition_frequencies({1 - kSqrt5, 1, 1 + kSqrt5});
    CHECK(g.w21 == doctest::Approx(kSqrt5));
    CHECK(g.w32 == doctest::Approx(kSqrt5));
    CHECK(g.w31 == doctest::Approx(2 * kSqrt5));

    const SpectralDecomposition d = decompose(build_tunneling_matrix(1, 1, 1));
    CHECK(d.freqs.w31 == d.freqs.w32 + d.freqs.w21);
    const TransitionFrequencies cf = closed_form_frequencies(d.p, d.phi);
    CHECK(std::abs(cf.w21 - d.freqs.w21) < 1e-10);
    CHECK(std::abs(cf.w32 - d.freqs.w32) < 1e-10);
    CHECK(std::abs(cf.w31 - d.freqs.w31) < 1e-10);
  }

  TEST_CASE("trace, determinant and reconstruction invariants") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int trial = 0; trial < 300; ++trial) {
      const SymmetricMatrix3 m(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
      const SpectralDecomposition d = decompose(m);
      const double norm = m.max_abs();
      CHECK(std::abs(d.energies[0] + d.energies[1] + d.energies[2] - m.trace()) <=
            1e-10 * norm);
      CHECK(std::abs(d.energies[0] * d.energies[1] * d.energies[2] - m.determinant()) <=
            1e-9 * norm * norm * norm);
      double worst = 0.0;
      for (int n = 0; n < 3; ++n) {
        for (int j = 0; j < 3; ++j) {
          double rec = 0.0;
          for (int k = 0; k < 3; ++k) rec += d.energies[k] * d.eigvecs[k][n] * d.eigvecs[k][j];
          worst = std::max(worst, std::abs(rec - m(n, j)));
        }
      }
      CHECK(worst <= 1e-9 * norm);
      CHECK(d.energies[0] < d.energies[1]);
      CHECK(d.energies[1] < d.energies[2]);
    }
  }
}
