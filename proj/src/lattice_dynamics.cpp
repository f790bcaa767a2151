#include "pft/lattice_dynamics.hpp"

#include <cmath>
#include <random>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "pft/error.hpp"
#include "pft/wigner.hpp"

namespace pft {

namespace {

void require_dense_dim(std::size_t dim, const char* what) {
  if (dim > kMaxDenseDim) {
    throw Error(ErrorKind::UnsupportedSize, std::string(what) + " of dimension " +
                                                std::to_string(dim) + " exceeds dense limit " +
                                                std::to_string(kMaxDenseDim));
  }
}

void require_scales(const LatticeDims& dims, std::size_t count) {
  if (count != dims.rank()) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(dims.rank()) +
                                                  " per-axis couplings, got " +
                                                  std::to_string(count));
  }
}

// I_before (x) op (x) I_after for the given axis.
Eigen::MatrixXcd embed_axis(const Eigen::MatrixXcd& op, const LatticeDims& dims,
                            std::size_t axis) {
  Eigen::Index before = 1;
  Eigen::Index after = 1;
  for (std::size_t a = 0; a < dims.rank(); ++a) {
    if (a < axis) before *= dims.extent(a);
    if (a > axis) after *= dims.extent(a);
  }
  const Eigen::MatrixXcd left =
      Eigen::kroneckerProduct(Eigen::MatrixXcd::Identity(before, before), op).eval();
  return Eigen::kroneckerProduct(left, Eigen::MatrixXcd::Identity(after, after)).eval();
}

Eigen::MatrixXcd chain_matrix(const std::vector<double>& amplitudes) {
  const auto dim = static_cast<Eigen::Index>(amplitudes.size() + 1);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index j = 0; j + 1 < dim; ++j) {
    const double v = amplitudes[static_cast<std::size_t>(j)];
    h(j, j + 1) = -v;
    h(j + 1, j) = -v;
  }
  return h;
}

// Spin-l component in the ascending-m basis; C_j = 1/2 sqrt(j (M - j)).
Eigen::MatrixXcd spin_component(int extent, Component component) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(extent, extent);
  for (int j = 1; j <= extent; ++j) {
    if (component == Component::Z) {
      m(j - 1, j - 1) = magnetic_number(j, extent).value();
      continue;
    }
    if (j == extent) continue;
    const double c = 0.5 * std::sqrt(static_cast<double>(j) * (extent - j));
    if (component == Component::X) {
      m(j - 1, j) = c;
      m(j, j - 1) = c;
    } else {
      m(j - 1, j) = Complex(0.0, c);
      m(j, j - 1) = Complex(0.0, -c);
    }
  }
  return m;
}

}  // namespace

double hermiticity_error(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_error(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  const auto n = m.rows();
  return (m.adjoint() * m - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

DenseOperator DenseOperator::hermitian(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "operator must be square");
  }
  if (hermiticity_error(m) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "operator is not Hermitian");
  }
  return {std::move(m), OperatorRole::Hermitian};
}

DenseOperator DenseOperator::unitary(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "operator must be square");
  }
  if (unitarity_error(m) > 1e-10) {
    throw Error(ErrorKind::NotUnitary, "operator is not unitary");
  }
  return {std::move(m), OperatorRole::Unitary};
}

DenseOperator chain_hamiltonian(int extent, double scale) {
  return chain_hamiltonian(coupling_profile(extent, scale));
}

DenseOperator chain_hamiltonian(const CouplingProfile& profile) {
  if (profile.values.empty()) {
    throw Error(ErrorKind::InvalidExtent, "chain needs at least two sites");
  }
  require_dense_dim(profile.values.size() + 1, "chain Hamiltonian");
  return {chain_matrix(profile.values), OperatorRole::Hermitian};
}

DenseOperator lattice_hamiltonian(const LatticeDims& dims, std::span<const double> scales) {
  require_scales(dims, scales.size());
  dims.require_transferable();
  std::vector<CouplingProfile> profiles;
  for (std::size_t a = 0; a < dims.rank(); ++a) {
    // J = 0 is a diagnostic that switches the axis off.
    CouplingProfile p = coupling_profile(dims.extent(a), 1.0, a);
    for (double& v : p.values) v *= scales[a];
    p.scale = scales[a];
    profiles.push_back(std::move(p));
  }
  return lattice_hamiltonian(dims, profiles);
}

DenseOperator lattice_hamiltonian(const LatticeDims& dims,
                                  std::span<const CouplingProfile> profiles) {
  require_scales(dims, profiles.size());
  dims.require_transferable();
  require_dense_dim(dims.site_count(), "lattice Hamiltonian");
  const auto n = static_cast<Eigen::Index>(dims.site_count());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t a = 0; a < dims.rank(); ++a) {
    if (profiles[a].extent() != dims.extent(a)) {
      throw Error(ErrorKind::DimensionMismatch,
                  "coupling profile for axis " + std::to_string(a) + " has extent " +
                      std::to_string(profiles[a].extent()) + ", lattice has " +
                      std::to_string(dims.extent(a)));
    }
    h += embed_axis(chain_matrix(profiles[a].values), dims, a);
  }
  return {std::move(h), OperatorRole::Hermitian};
}

QuasiAngularMomentum quasi_L(const LatticeDims& dims, std::size_t axis, Component component) {
  if (axis >= dims.rank()) {
    throw Error(ErrorKind::IndexOutOfRange, "axis " + std::to_string(axis) +
                                                " invalid for lattice of rank " +
                                                std::to_string(dims.rank()));
  }
  require_dense_dim(dims.site_count(), "quasi angular momentum");
  return {axis, component,
          {embed_axis(spin_component(dims.extent(axis), component), dims, axis),
           OperatorRole::Hermitian}};
}

DenseOperator propagator_numeric(const DenseOperator& hamiltonian, double t) {
  require_dense_dim(static_cast<std::size_t>(hamiltonian.dim()), "propagator");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian.matrix);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "Hermitian eigendecomposition failed");
  }
  const Eigen::VectorXcd phases =
      (solver.eigenvalues().cast<Complex>() * Complex(0.0, -t)).array().exp();
  return {solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint(),
          OperatorRole::Unitary};
}

DenseOperator propagator_analytic_1d(int extent, double scale, double t) {
  if (extent < 2) {
    throw Error(ErrorKind::InvalidExtent,
                "chain propagator needs extent >= 2, got " + std::to_string(extent));
  }
  if (extent - 1 > kMaxTwoL) {
    throw Error(ErrorKind::UnsupportedSize, "chain extent " + std::to_string(extent) +
                                                " exceeds supported maximum " +
                                                std::to_string(kMaxTwoL + 1));
  }
  const WignerD d = wigner_d(extent - 1, scale * t);
  Eigen::MatrixXcd u(extent, extent);
  for (int r = 0; r < extent; ++r) {
    for (int c = 0; c < extent; ++c) {
      // (-i)^{m'-m} with m' - m = r - c
      u(r, c) = i_power(c - r) * d.matrix(r, c);
    }
  }
  return {std::move(u), OperatorRole::Unitary};
}

DenseOperator propagator_analytic(const LatticeDims& dims, std::span<const double> scales,
                                  double t) {
  require_scales(dims, scales.size());
  dims.require_transferable();
  require_dense_dim(dims.site_count(), "lattice propagator");
  Eigen::MatrixXcd u = propagator_analytic_1d(dims.extent(0), scales[0], t).matrix;
  for (std::size_t a = 1; a < dims.rank(); ++a) {
    const Eigen::MatrixXcd next = propagator_analytic_1d(dims.extent(a), scales[a], t).matrix;
    u = Eigen::kroneckerProduct(u, next).eval();
  }
  return {std::move(u), OperatorRole::Unitary};
}

Complex convention_phase(const DenseOperator& analytic, const DenseOperator& numeric) {
  if (analytic.dim() != numeric.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "operators differ in dimension");
  }
  const Complex overlap = (numeric.matrix.adjoint() * analytic.matrix).trace();
  if (std::abs(overlap) == 0.0) return {1.0, 0.0};
  return overlap / std::abs(overlap);
}

Complex transfer_amplitude(const LatticeDims& dims, std::span<const double> scales,
                           const SiteIndex& source, const SiteIndex& target, double t) {
  require_scales(dims, scales.size());
  dims.require_transferable();
  validate_site(source, dims);
  validate_site(target, dims);
  Complex amplitude{1.0, 0.0};
  for (std::size_t a = 0; a < dims.rank(); ++a) {
    const DenseOperator u = propagator_analytic_1d(dims.extent(a), scales[a], t);
    amplitude *= u.matrix(target.coords[a] - 1, source.coords[a] - 1);
  }
  return amplitude;
}

Complex mirror_arrival_phase(const LatticeDims& dims, double scale) {
  if (scale == 0.0) {
    throw Error(ErrorKind::DegenerateCoupling, "transfer undefined for J = 0");
  }
  const SignaturePhase r = signature(dims);
  return scale > 0.0 ? r.conj().value() : r.value();
}

std::vector<FidelityPoint> fidelity_sweep(const LatticeDims& dims, std::span<const double> scales,
                                          const SiteIndex& source, const SiteIndex& target,
                                          std::span<const double> t_grid) {
  if (t_grid.empty()) {
    throw Error(ErrorKind::InvalidArgument, "time grid is empty");
  }
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "time grid must be strictly increasing");
    }
  }
  std::vector<FidelityPoint> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    out.push_back({t, std::norm(transfer_amplitude(dims, scales, source, target, t))});
  }
  return out;
}

CouplingProfile disorder_perturb(const CouplingProfile& profile, double epsilon,
                                 std::uint64_t seed) {
  if (!(epsilon >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "disorder strength must be >= 0");
  }
  std::mt19937_64 engine(seed);
  CouplingProfile out = profile;
  for (double& v : out.values) {
    // 53 random bits mapped to [-1, 1]; avoids the implementation-defined
    // std::uniform_real_distribution so results match across standard libraries.
    const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    v *= 1.0 + epsilon * (2.0 * unit - 1.0);
  }
  return out;
}

double commutator_norm(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "commutator needs equal square operators");
  }
  if (a.size() == 0) return 0.0;
  return (a * b - b * a).cwiseAbs().maxCoeff();
}

double commutator_norm(const DenseOperator& a, const DenseOperator& b) {
  return commutator_norm(a.matrix, b.matrix);
}

}  // namespace pft
