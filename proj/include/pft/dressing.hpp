#pragma once

#include <cstdint>
#include <span>
#include <variant>

#include "pft/fock.hpp"
#include "pft/lattice_dynamics.hpp"

namespace pft {

struct LzRotation {
  double theta = 0.0;
};

struct GenericDressing {
  DenseOperator unitary;  // acts on the single-particle sector
};

using DressingSpec = std::variant<LzRotation, GenericDressing>;

/// W H W^dagger. W must be unitary to 1e-10.
DenseOperator dress(const DenseOperator& hamiltonian, const DenseOperator& w);

/// exp(-i theta sum_a L_z^(a)) on the single-particle sector.
DenseOperator lz_dressing_unitary(const LatticeDims& dims, double theta);

/// Same rotation on a fixed-number sector: each particle contributes the
/// magnetic-number sum of its site.
DenseOperator lz_dressing_unitary(const FockBasis& basis, const FockModel& model, double theta);

/// Haar-like unitary from the QR factorization of a seeded complex Gaussian matrix.
DenseOperator random_unitary(Eigen::Index dim, std::uint64_t seed);

struct DressedTransferReport {
  TransferReport transfer;
  /// Lz dressing only: exp(-i theta sum_a m_a) of the first anchor site and of
  /// its mirror, next to exp(-i (sum extents + 1) theta) as printed in the
  /// dressed-state formula for comparison.
  Complex source_dressing_phase{1.0, 0.0};
  Complex target_dressing_phase{1.0, 0.0};
  Complex quoted_phase{1.0, 0.0};
};

/// Evolves W f(anchors)|0> under W H W^dagger (H the engineered hopping with
/// equal J) and compares against W f(mirror anchors)|0>. A generic W covers
/// only the vacuum and one-particle sectors.
DressedTransferReport dressed_transfer_check(const FockModel& model, const DressingSpec& dressing,
                                             const PolynomialFunction& f,
                                             std::span<const ModeIndex> anchors, double t,
                                             double scale = 1.0);

}  // namespace pft
