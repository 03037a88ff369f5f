#include <doctest.h>

#include <cmath>
#include <random>

#include "bhdimer/dynamics.hpp"
#include "bhdimer/entanglement.hpp"
#include "bhdimer/error.hpp"
#include "bhdimer/simplex.hpp"
#include "oracles.hpp"

using namespace bhdimer;

TEST_SUITE("simplex") {
  TEST_CASE("classification of named points") {
    CHECK(classify({1.0 / 3, 1.0 / 3, 1.0 / 3}) == Region::InsideDelta2);
    CHECK(classify({0.5, 0.0, 0.5}) == Region::OnDelta2Boundary);
    CHECK(classify({0.5, 0.5, 0.0}) == Region::OnDelta2Boundary);
    CHECK(classify({0.5, 0.25, 0.25}) == Region::OnDelta2Boundary);
    CHECK(classify({0.7, 0.2, 0.1}) == Region::OutsideDelta2);
    CHECK(classify({1.0, 0.0, 0.0}) == Region::OutsideDelta2);
    CHECK(classify({0.4, 0.3, 0.3}) == Region::InsideDelta2);
    CHECK(classify({0.5 + 5e-13, 0.25, 0.25 - 5e-13}) == Region::OnDelta2Boundary);
    CHECK(classify({0.5 + 1e-9, 0.25, 0.25 - 1e-9}) == Region::OutsideDelta2);
    CHECK(std::string(to_string(Region::InsideDelta2)) == "inside");
    CHECK(std::string(to_string(Region::OnDelta2Boundary)) == "boundary");
    CHECK(std::string(to_string(Region::OutsideDelta2)) == "outside");
  }

  TEST_CASE("invalid coordinates") {
    for (const std::array<double, 3>& bad :
         {std::array{0.6, 0.6, -0.2}, std::array{0.3, 0.3, 0.3}, std::array{std::nan(""), 0.5, 0.5}}) {
      try {
        (void)classify(bad);
        FAIL("accepted invalid coordinates");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidDistribution);
      }
    }
  }

  TEST_CASE("edge concurrence") {
    CHECK(edge_concurrence(0.25) == doctest::Approx(std::sqrt(15.0) / 4).epsilon(1e-15));
    CHECK(edge_concurrence(1e-9) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-8));
    for (double r : {0.0, 0.5, -0.1, 0.7}) {
      try {
        (void)edge_concurrence(r);
        FAIL("accepted r outside (0, 1/2)");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DomainError);
      }
    }
    // Matches the diagonal concurrence on the boundary edge.
    for (int j = 1; j < 50; ++j) {
      const double r = 0.01 * j;
      CHECK(edge_concurrence(r) == doctest::Approx(diagonal_concurrence({0.5, r, 0.5 - r})).epsilon(1e-13));
      CHECK(edge_concurrence(r) >= std::sqrt(3.0) / 2 - 1e-15);
      CHECK(edge_concurrence(r) <= std::sqrt(15.0) / 4 + 1e-15);
    }
  }

  TEST_CASE("grid size and order") {
    CHECK(sample_simplex(2).size() == 6);
    CHECK(sample_simplex(3).size() == 10);
    CHECK(sample_simplex(100).size() == 5151);
    CHECK_THROWS_AS(sample_simplex(1), Error);

    const auto pts = sample_simplex(2);
    const std::array<std::array<double, 3>, 6> expected{{
        {0, 0, 1}, {0, 0.5, 0.5}, {0, 1, 0}, {0.5, 0, 0.5}, {0.5, 0.5, 0}, {1, 0, 0}}};
    for (std::size_t j = 0; j < pts.size(); ++j) CHECK(pts[j].r == expected[j]);
    CHECK(pts[0].region == Region::OutsideDelta2);
    CHECK(pts[1].region == Region::OnDelta2Boundary);
    CHECK(pts[3].concurrence == doctest::Approx(std::sqrt(3.0) / 2));
  }

  TEST_CASE("grid regions agree with classify and counts are exact") {
    for (int n : {3, 4, 7, 10, 51}) {
      int inside = 0, boundary = 0, outside = 0;
      for (const SimplexPoint& p : sample_simplex(n)) {
        CHECK(p.region == classify(p.r));
        CHECK(p.concurrence == doctest::Approx(diagonal_concurrence(p.r)));
        (p.region == Region::InsideDelta2 ? inside
         : p.region == Region::OnDelta2Boundary ? boundary : outside)++;
      }
      // Points with some coordinate strictly above n/2, counted per vertex.
      long expect_out = 0;
      for (int a = n / 2 + 1; a <= n; ++a) expect_out += 3L * (n - a + 1);
      CHECK(outside == expect_out);
      CHECK(inside + boundary + outside == (n + 1) * (n + 2) / 2);
      if (n % 2 == 1) CHECK(boundary == 0);
    }
  }

  TEST_CASE("threshold concurrence marks the disk through the central-triangle vertices") {
    const double threshold = std::sqrt(3.0) / 2;
    int outside_above = 0;
    for (const SimplexPoint& p : sample_simplex(200)) {
      double spread = 0.0;
      for (double x : p.r) spread += (x - 1.0 / 3) * (x - 1.0 / 3);
      // 1 - C^2 = 1.5 * spread, so C >= sqrt3/2 iff spread <= 1/6.
      CHECK((p.concurrence >= threshold - 1e-12) == (spread <= 1.0 / 6 + 1e-12));
      if (p.region != Region::OutsideDelta2) CHECK(p.concurrence >= threshold - 1e-12);
      if (p.concurrence < threshold - 1e-12) CHECK(p.region == Region::OutsideDelta2);
      if (p.region == Region::OutsideDelta2 && p.concurrence >= threshold) ++outside_above;
    }
    // Outside points just beyond an edge still exceed the threshold.
    CHECK(outside_above > 0);
    CHECK(classify({0.51, 0.245, 0.245}) == Region::OutsideDelta2);
    CHECK(diagonal_concurrence({0.51, 0.245, 0.245}) > threshold);
  }

  TEST_CASE("orthogonality needs the central sub-simplex") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(0.05, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
      const Energies e = closed_form_eigenvalues(build_tunneling_matrix(1, u(rng), u(rng))).energies;
      const EnergyDistribution dist = oracle::random_distribution(rng);
      const auto t = find_orthogonality_time(dist, e, 20.0);
      if (classify(dist.r()) == Region::OutsideDelta2) CHECK_FALSE(t.has_value());
      if (t) CHECK(std::abs(survival_amplitude(dist, e, *t)) < kDefaultOrthogonalityTol);
    }
  }
}
