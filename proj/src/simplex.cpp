#include "bhdimer/simplex.hpp"

#include <algorithm>
#include <cmath>

#include "bhdimer/entanglement.hpp"
#include "bhdimer/error.hpp"

namespace bhdimer {

namespace {

constexpr double kNormTol = 1e-12;

}  // namespace

const char* to_string(Region region) noexcept {
  switch (region) {
    case Region::InsideDelta2: return "inside";
    case Region::OnDelta2Boundary: return "boundary";
    case Region::OutsideDelta2: return "outside";
  }
  return "unknown";
}

Region classify(const std::array<double, 3>& r) {
  double sum = 0.0;
  for (double x : r) {
    if (!std::isfinite(x) || x < -kNormTol) {
      throw Error(ErrorCode::InvalidDistribution,
                  "simplex coordinates must be non-negative");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kNormTol) {
    throw Error(ErrorCode::InvalidDistribution,
                "simplex coordinates must sum to 1");
  }
  // The central triangle spanned by the edge midpoints is {r_i <= 1/2}.
  const double top = std::max({r[0], r[1], r[2]});
  if (std::abs(top - 0.5) <= kBoundaryTol) return Region::OnDelta2Boundary;
  return top < 0.5 ? Region::InsideDelta2 : Region::OutsideDelta2;
}

double edge_concurrence(double r) {
  if (!(r > 0.0 && r < 0.5)) {
    throw Error(ErrorCode::DomainError, "edge parameter must lie in (0, 1/2)");
  }
  return std::sqrt(0.75 * (1.0 + 2.0 * r * (1.0 - 2.0 * r)));
}

std::vector<SimplexPoint> sample_simplex(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "grid resolution must be >= 2");
  std::vector<SimplexPoint> out;
  out.reserve(static_cast<std::size_t>(n + 1) * (n + 2) / 2);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n - a; ++b) {
      const int c = n - a - b;
      SimplexPoint pt;
      pt.r = {static_cast<double>(a) / n, static_cast<double>(b) / n,
              static_cast<double>(c) / n};
      // Classify on exact integers: 2 * max(a, b, c) vs n.
      const int twice_top = 2 * std::max({a, b, c});
      pt.region = twice_top == n  ? Region::OnDelta2Boundary
                  : twice_top < n ? Region::InsideDelta2
                                  : Region::OutsideDelta2;
      pt.concurrence = diagonal_concurrence(pt.r);
      out.push_back(pt);
    }
  }
  return out;
}

}  // namespace bhdimer
