#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pft/core_algebra.hpp"

namespace pft {

/// Dense operators above this dimension are refused.
inline constexpr std::size_t kMaxDenseDim = 4096;

enum class OperatorRole { Hermitian, Unitary, General };

/// Complex square matrix tagged with the property callers may rely on.
struct DenseOperator {
  Eigen::MatrixXcd matrix;
  OperatorRole role = OperatorRole::General;

  Eigen::Index dim() const noexcept { return matrix.rows(); }

  /// Validates ||A - A^dagger||_max <= 1e-12.
  static DenseOperator hermitian(Eigen::MatrixXcd m);
  /// Validates ||U^dagger U - I||_max <= 1e-10.
  static DenseOperator unitary(Eigen::MatrixXcd m);
};

double hermiticity_error(const Eigen::MatrixXcd& m);
double unitarity_error(const Eigen::MatrixXcd& m);

enum class Component { X, Y, Z };

struct QuasiAngularMomentum {
  std::size_t axis = 0;
  Component component = Component::X;
  DenseOperator op;
};

/// -J sum_j C_j (|j><j+1| + h.c.), i.e. -J L_x of spin (M-1)/2.
DenseOperator chain_hamiltonian(int extent, double scale);

/// Chain hopping with arbitrary amplitudes: -sum_j values[j] (|j><j+1| + h.c.).
DenseOperator chain_hamiltonian(const CouplingProfile& profile);

/// Kronecker sum of engineered per-axis chains, row-major with axis 0 slowest.
/// A zero scale on one axis is accepted and decouples that axis.
DenseOperator lattice_hamiltonian(const LatticeDims& dims, std::span<const double> scales);

/// Kronecker sum of arbitrary per-axis chains; profiles[a].extent() must match.
DenseOperator lattice_hamiltonian(const LatticeDims& dims,
                                  std::span<const CouplingProfile> profiles);

QuasiAngularMomentum quasi_L(const LatticeDims& dims, std::size_t axis, Component component);

/// exp(-i H t) by Hermitian eigendecomposition.
DenseOperator propagator_numeric(const DenseOperator& hamiltonian, double t);

/// Schroedinger-picture chain propagator exp(+i J t L_x) from the Wigner d
/// matrix: U_{m'm} = (-i)^{m'-m} d^l_{m'm}(J t). Its complex conjugate is the
/// Heisenberg coefficient matrix i^{m'-m} d^l_{m'm}(J t).
DenseOperator propagator_analytic_1d(int extent, double scale, double t);

/// Kronecker product of per-axis analytic propagators.
DenseOperator propagator_analytic(const LatticeDims& dims, std::span<const double> scales,
                                  double t);

/// Unit phase phi minimizing ||analytic - phi * numeric||; 1 under the sign
/// convention used here.
Complex convention_phase(const DenseOperator& analytic, const DenseOperator& numeric);

/// <target| U(t) |source>, factorized per axis so it never builds the full
/// lattice propagator.
Complex transfer_amplitude(const LatticeDims& dims, std::span<const double> scales,
                           const SiteIndex& source, const SiteIndex& target, double t);

/// Site-independent value of U_{mirror(s), s}(t0) for equal per-axis J:
/// conj(r1 r2 r3) for J > 0 and r1 r2 r3 for J < 0.
Complex mirror_arrival_phase(const LatticeDims& dims, double scale);

struct FidelityPoint {
  double t = 0.0;
  double fidelity = 0.0;
};

std::vector<FidelityPoint> fidelity_sweep(const LatticeDims& dims, std::span<const double> scales,
                                          const SiteIndex& source, const SiteIndex& target,
                                          std::span<const double> t_grid);

/// Multiplies each amplitude by (1 + epsilon u), u uniform in [-1, 1].
CouplingProfile disorder_perturb(const CouplingProfile& profile, double epsilon,
                                 std::uint64_t seed);

/// max |AB - BA|.
double commutator_norm(const DenseOperator& a, const DenseOperator& b);
double commutator_norm(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace pft
