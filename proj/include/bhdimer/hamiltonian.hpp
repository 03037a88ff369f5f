#pragma once

#include <array>
#include <cstddef>

namespace bhdimer {

/// Physical couplings of the extended dimer. Energies are in units of eps1.
struct HamiltonianParams {
  double eps0 = 0.0;
  double eps1 = 1.0;
  double eps01 = 0.0;  // inter-site interaction
  double U = 0.0;      // on-site interaction
  double J = 0.0;      // single-particle tunneling
  double K = 0.0;      // two-particle (pair) tunneling
};

/// Real symmetric 3x3 matrix in the Fock basis {|0>, |1>, |2>}, where |n>
/// holds n bosons in site 1 and 2-n in site 0. Only the upper triangle is
/// stored, so symmetry holds bitwise.
class SymmetricMatrix3 {
 public:
  SymmetricMatrix3() = default;
  SymmetricMatrix3(double h00, double h01, double h02, double h11, double h12,
                   double h22)
      : v_{h00, h01, h02, h11, h12, h22} {}

  static SymmetricMatrix3 diagonal(double d0, double d1, double d2) {
    return {d0, 0.0, 0.0, d1, 0.0, d2};
  }

  double operator()(int n, int m) const { return v_[index(n, m)]; }
  void set(int n, int m, double value) { v_[index(n, m)] = value; }

  double trace() const { return v_[0] + v_[3] + v_[5]; }
  double determinant() const;
  double max_abs() const;

  bool operator==(const SymmetricMatrix3&) const = default;

 private:
  static std::size_t index(int n, int m);

  std::array<double, 6> v_{};
};

/// One- and two-body coupling tensors of the second-quantized Hamiltonian.
/// Construction rejects tensors that violate Hermiticity.
class RawCouplings {
 public:
  using OneBody = std::array<std::array<double, 2>, 2>;
  using TwoBody =
      std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2>;

  RawCouplings(const OneBody& one, const TwoBody& two);

  const OneBody& one_body() const { return one_; }
  const TwoBody& two_body() const { return two_; }

  /// Embeds site-symmetric params back into tensor form (inverse of
  /// reduce_couplings on its image).
  static RawCouplings embed(const HamiltonianParams& p);

 private:
  OneBody one_;
  TwoBody two_;
};

HamiltonianParams reduce_couplings(const RawCouplings& raw);

SymmetricMatrix3 build_extended_matrix(const HamiltonianParams& p);

/// Extended matrix with eps0 = eps01 = U = 0.
SymmetricMatrix3 build_tunneling_matrix(double eps1, double J, double K);

}  // namespace bhdimer
