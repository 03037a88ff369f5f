#pragma once

#include <array>
#include <vector>

namespace bhdimer {

/// Position of an energy distribution relative to the central sub-simplex
/// {r : r_i <= 1/2}.
enum class Region { InsideDelta2, OnDelta2Boundary, OutsideDelta2 };

const char* to_string(Region region) noexcept;

struct SimplexPoint {
  std::array<double, 3> r{};
  Region region = Region::OutsideDelta2;
  double concurrence = 0.0;
};

inline constexpr double kBoundaryTol = 1e-12;

/// Throws InvalidDistribution for negative entries or sum != 1.
Region classify(const std::array<double, 3>& r);

/// Diagonal concurrence along an edge {1/2, r, 1/2 - r}, 0 < r < 1/2.
double edge_concurrence(double r);

/// Barycentric grid (a, b, c) / n in lexicographic (a, b) order.
std::vector<SimplexPoint> sample_simplex(int n);

}  // namespace bhdimer
