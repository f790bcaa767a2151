#include "pft/dressing.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "pft/error.hpp"

namespace pft {

DenseOperator dress(const DenseOperator& hamiltonian, const DenseOperator& w) {
  if (hamiltonian.dim() != w.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "dressing unitary has dimension " +
                                                  std::to_string(w.dim()) + ", operator has " +
                                                  std::to_string(hamiltonian.dim()));
  }
  if (unitarity_error(w.matrix) > 1e-10) {
    throw Error(ErrorKind::NotUnitary, "dressing operator is not unitary");
  }
  Eigen::MatrixXcd out = w.matrix * hamiltonian.matrix * w.matrix.adjoint();
  return {std::move(out), hamiltonian.role};
}

namespace {

// Twice the sum over axes of the magnetic numbers of a site.
int twice_lz(const SiteIndex& site, const LatticeDims& dims) {
  int sum = 0;
  for (std::size_t a = 0; a < dims.rank(); ++a) {
    sum += magnetic_number(site.coords[a], dims.extent(a)).twice();
  }
  return sum;
}

Complex lz_phase(int twice_m, double theta) { return std::polar(1.0, -0.5 * theta * twice_m); }

}  // namespace

DenseOperator lz_dressing_unitary(const LatticeDims& dims, double theta) {
  const auto n = static_cast<Eigen::Index>(dims.site_count());
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    w(i, i) = lz_phase(twice_lz(unflatten(static_cast<std::size_t>(i), dims), dims), theta);
  }
  return {std::move(w), OperatorRole::Unitary};
}

DenseOperator lz_dressing_unitary(const FockBasis& basis, const FockModel& model, double theta) {
  if (basis.mode_count() != model.mode_count()) {
    throw Error(ErrorKind::DimensionMismatch, "basis does not belong to the model");
  }
  std::vector<int> mode_twice_m(model.mode_count());
  for (std::size_t m = 0; m < model.mode_count(); ++m) {
    mode_twice_m[m] = twice_lz(model.mode_at(m).site, model.dims());
  }
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const OccupationState& s = basis.state(static_cast<std::size_t>(i));
    int total = 0;
    for (std::size_t m = 0; m < s.size(); ++m) total += s[m] * mode_twice_m[m];
    w(i, i) = lz_phase(total, theta);
  }
  return {std::move(w), OperatorRole::Unitary};
}

DenseOperator random_unitary(Eigen::Index dim, std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorKind::InvalidArgument, "unitary dimension must be >= 1");
  std::mt19937_64 engine(seed);
  const auto uniform = [&engine] {
    return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
  };
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      // Box-Muller
      const double radius = std::sqrt(-2.0 * std::log(uniform()));
      const double angle = 2.0 * std::numbers::pi * uniform();
      g(r, c) = Complex(radius * std::cos(angle), radius * std::sin(angle));
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < dim; ++c) {
    const Complex d = r(c, c);
    if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
  }
  return {std::move(q), OperatorRole::Unitary};
}

DressedTransferReport dressed_transfer_check(const FockModel& model, const DressingSpec& dressing,
                                             const PolynomialFunction& f,
                                             std::span<const ModeIndex> anchors, double t,
                                             double scale) {
  if (scale == 0.0) {
    throw Error(ErrorKind::DegenerateCoupling, "coupling scale J must be nonzero");
  }
  const LatticeDims& dims = model.dims();
  const std::vector<double> scales(dims.rank(), scale);
  const DenseOperator h_sites = lattice_hamiltonian(dims, scales);
  const Eigen::MatrixXcd mode_h = model.lift(h_sites.matrix);

  std::vector<ModeIndex> targets;
  for (const ModeIndex& a : anchors) targets.push_back(model.mirror(a));

  // Sector unitary for W; throws when W cannot act on the sector.
  const auto sector_w = [&](const FockBasis& b) -> DenseOperator {
    if (const auto* lz = std::get_if<LzRotation>(&dressing)) {
      return lz_dressing_unitary(b, model, lz->theta);
    }
    const auto& generic = std::get<GenericDressing>(dressing);
    if (b.particles() == 0) return {Eigen::MatrixXcd::Identity(1, 1), OperatorRole::Unitary};
    if (b.particles() == 1 &&
        generic.unitary.dim() == static_cast<Eigen::Index>(b.size())) {
      return generic.unitary;
    }
    throw Error(ErrorKind::DimensionMismatch,
                "generic dressing acts on the one-particle sector only; sector n = " +
                    std::to_string(b.particles()) + " is not representable");
  };

  const auto apply_w = [&](const FockState& s) {
    FockState out = s;
    for (FockVector& v : out.sectors) v.amplitudes = sector_w(*v.basis).matrix * v.amplitudes;
    return out;
  };

  const FockState source = apply_w(state_from_function(model, f, anchors));
  const FockState target = apply_w(state_from_function(model, f, targets));
  const FockState evolved = evolve(
      source,
      [&](const FockBasis& b) {
        const DenseOperator h{second_quantize(b, mode_h), OperatorRole::Hermitian};
        return dress(h, sector_w(b));
      },
      t);

  DressedTransferReport report;
  report.transfer = compare_up_to_sector_phases(evolved, target);
  if (const auto* lz = std::get_if<LzRotation>(&dressing); lz != nullptr && !anchors.empty()) {
    report.source_dressing_phase = lz_phase(twice_lz(anchors.front().site, dims), lz->theta);
    report.target_dressing_phase = lz_phase(twice_lz(targets.front().site, dims), lz->theta);
    int extent_sum = 0;
    for (int e : dims.extents()) extent_sum += e;
    report.quoted_phase = std::polar(1.0, -static_cast<double>(extent_sum + 1) * lz->theta);
  }
  return report;
}

}  // namespace pft
