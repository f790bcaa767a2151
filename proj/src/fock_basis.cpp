#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "pft/error.hpp"
#include "pft/fock.hpp"

namespace pft {

std::string_view to_string(Statistics statistics) {
  switch (statistics) {
    case Statistics::Boson: return "boson";
    case Statistics::Fermion: return "fermion";
    case Statistics::HardCore: return "hardcore";
  }
  return "unknown";
}

FockModel::FockModel(LatticeDims dims, Statistics statistics, bool spinful)
    : dims_(std::move(dims)), statistics_(statistics), spinful_(spinful) {
  if (spinful_ && statistics_ != Statistics::Fermion) {
    throw Error(ErrorKind::WrongStatistics, "spin flavor is only modeled for fermions");
  }
}

std::size_t FockModel::mode_of(const ModeIndex& mode) const {
  const std::size_t site = flatten(mode.site, dims_);
  if (!spinful_) {
    if (mode.spin != Spin::None) {
      throw Error(ErrorKind::IndexOutOfRange, "spin given for a spinless model");
    }
    return site;
  }
  if (mode.spin == Spin::None) {
    throw Error(ErrorKind::IndexOutOfRange, "spinful model needs a spin on every mode");
  }
  return 2 * site + (mode.spin == Spin::Up ? 0 : 1);
}

ModeIndex FockModel::mode_at(std::size_t index) const {
  if (index >= mode_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "mode " + std::to_string(index) + " out of range");
  }
  if (!spinful_) return {unflatten(index, dims_), Spin::None};
  return {unflatten(index / 2, dims_), index % 2 == 0 ? Spin::Up : Spin::Down};
}

ModeIndex FockModel::mirror(const ModeIndex& mode) const {
  return {mirror_site(mode.site, dims_), mode.spin};
}

Eigen::MatrixXcd FockModel::lift(const Eigen::MatrixXcd& site_operator) const {
  if (static_cast<std::size_t>(site_operator.rows()) != dims_.site_count()) {
    throw Error(ErrorKind::DimensionMismatch, "site operator does not match the lattice");
  }
  if (!spinful_) return site_operator;
  return Eigen::kroneckerProduct(site_operator, Eigen::MatrixXcd::Identity(2, 2)).eval();
}

std::size_t OccupationHash::operator()(const OccupationState& s) const noexcept {
  // FNV-1a
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint8_t b : s) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t sector_dimension(Statistics statistics, std::size_t mode_count, int particles) {
  if (particles < 0) return 0;
  // C(top, k) with saturation.
  std::uint64_t top = 0;
  std::uint64_t k = static_cast<std::uint64_t>(particles);
  if (statistics == Statistics::Boson) {
    if (mode_count == 0) return particles == 0 ? 1 : 0;
    top = mode_count + k - 1;
  } else {
    top = mode_count;
    if (k > top) return 0;
  }
  if (k > top - k) k = top - k;
  long double value = 1.0L;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * static_cast<long double>(top - k + i) / static_cast<long double>(i);
    if (value > 1e18L) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(std::llround(value));
}

FockBasis::FockBasis(Statistics statistics, std::size_t mode_count, int particles)
    : statistics_(statistics), mode_count_(mode_count), particles_(particles) {
  if (particles < 0) {
    throw Error(ErrorKind::InvalidArgument, "particle number must be >= 0");
  }
  if (statistics == Statistics::Boson && particles > 255) {
    throw Error(ErrorKind::UnsupportedSize, "at most 255 bosons per sector");
  }
  const std::uint64_t dim = sector_dimension(statistics, mode_count, particles);
  if (dim > kMaxSectorDim) {
    throw Error(ErrorKind::UnsupportedSize, "sector dimension " + std::to_string(dim) +
                                                " exceeds limit " + std::to_string(kMaxSectorDim));
  }
  if (dim == 0) {
    throw Error(ErrorKind::InvalidArgument, std::to_string(particles) + " particles do not fit in " +
                                                std::to_string(mode_count) + " modes");
  }
  const int cap = statistics == Statistics::Boson ? particles : 1;
  states_.reserve(static_cast<std::size_t>(dim));
  OccupationState current(mode_count, 0);
  // Depth-first with the largest occupancy first gives descending lexicographic order.
  const auto fill = [&](auto&& self, std::size_t mode, int remaining) -> void {
    if (mode == mode_count) {
      if (remaining == 0) states_.push_back(current);
      return;
    }
    for (int n = std::min(cap, remaining); n >= 0; --n) {
      current[mode] = static_cast<std::uint8_t>(n);
      self(self, mode + 1, remaining - n);
    }
    current[mode] = 0;
  };
  fill(fill, 0, particles);
  index_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::optional<std::size_t> FockBasis::index_of(const OccupationState& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FockBasis enumerate_basis(const FockModel& model, int particles) {
  return FockBasis(model.statistics(), model.mode_count(), particles);
}

FockBasis enumerate_basis(const LatticeDims& dims, Statistics statistics, bool spinful,
                          int particles) {
  return enumerate_basis(FockModel(dims, statistics, spinful), particles);
}

namespace {

double parity_sign(const OccupationState& state, std::size_t mode) {
  unsigned count = 0;
  for (std::size_t k = 0; k < mode; ++k) count += state[k];
  return (count % 2 == 0) ? 1.0 : -1.0;
}

void check_mode(const OccupationState& state, std::size_t mode) {
  if (mode >= state.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "mode " + std::to_string(mode) + " out of range");
  }
}

}  // namespace

LadderResult apply_creation(const OccupationState& state, std::size_t mode,
                            Statistics statistics) {
  check_mode(state, mode);
  LadderResult out{state, 0.0};
  const std::uint8_t n = state[mode];
  switch (statistics) {
    case Statistics::Boson:
      if (n == 255) throw Error(ErrorKind::UnsupportedSize, "boson occupancy overflow");
      out.state[mode] = static_cast<std::uint8_t>(n + 1);
      out.factor = std::sqrt(static_cast<double>(n) + 1.0);
      break;
    case Statistics::Fermion:
      if (n == 0) {
        out.factor = parity_sign(state, mode);
        out.state[mode] = 1;
      }
      break;
    case Statistics::HardCore:
      if (n == 0) {
        out.factor = 1.0;
        out.state[mode] = 1;
      }
      break;
  }
  return out;
}

LadderResult apply_annihilation(const OccupationState& state, std::size_t mode,
                                Statistics statistics) {
  check_mode(state, mode);
  LadderResult out{state, 0.0};
  const std::uint8_t n = state[mode];
  if (n == 0) return out;
  out.state[mode] = static_cast<std::uint8_t>(n - 1);
  switch (statistics) {
    case Statistics::Boson: out.factor = std::sqrt(static_cast<double>(n)); break;
    case Statistics::Fermion: out.factor = parity_sign(state, mode); break;
    case Statistics::HardCore: out.factor = 1.0; break;
  }
  return out;
}

Eigen::MatrixXcd second_quantize(const FockBasis& basis, const Eigen::MatrixXcd& mode_operator) {
  const auto modes = static_cast<Eigen::Index>(basis.mode_count());
  if (mode_operator.rows() != modes || mode_operator.cols() != modes) {
    throw Error(ErrorKind::DimensionMismatch, "mode operator is " +
                                                  std::to_string(mode_operator.rows()) +
                                                  " x " + std::to_string(mode_operator.cols()) +
                                                  ", basis has " + std::to_string(modes) +
                                                  " modes");
  }
  if (basis.size() > kMaxDenseDim) {
    throw Error(ErrorKind::UnsupportedSize, "sector dimension " + std::to_string(basis.size()) +
                                                " exceeds dense limit " +
                                                std::to_string(kMaxDenseDim));
  }
  std::vector<std::vector<Eigen::Index>> column_support(static_cast<std::size_t>(modes));
  for (Eigen::Index j = 0; j < modes; ++j) {
    for (Eigen::Index i = 0; i < modes; ++i) {
      if (mode_operator(i, j) != Complex(0.0, 0.0)) {
        column_support[static_cast<std::size_t>(j)].push_back(i);
      }
    }
  }
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const OccupationState& s = basis.state(static_cast<std::size_t>(col));
    for (Eigen::Index j = 0; j < modes; ++j) {
      if (s[static_cast<std::size_t>(j)] == 0) continue;
      const LadderResult lowered =
          apply_annihilation(s, static_cast<std::size_t>(j), basis.statistics());
      for (Eigen::Index i : column_support[static_cast<std::size_t>(j)]) {
        const LadderResult raised =
            apply_creation(lowered.state, static_cast<std::size_t>(i), basis.statistics());
        if (raised.factor == 0.0) continue;
        const auto row = basis.index_of(raised.state);
        out(static_cast<Eigen::Index>(*row), col) +=
            mode_operator(i, j) * (lowered.factor * raised.factor);
      }
    }
  }
  return out;
}

namespace {

void check_basis(const FockBasis& basis, const FockModel& model) {
  if (basis.mode_count() != model.mode_count() || basis.statistics() != model.statistics()) {
    throw Error(ErrorKind::DimensionMismatch, "basis does not belong to the model");
  }
}

}  // namespace

DenseOperator build_hopping(const FockBasis& basis, const FockModel& model,
                            std::span<const double> scales) {
  check_basis(basis, model);
  const DenseOperator h = lattice_hamiltonian(model.dims(), scales);
  return {second_quantize(basis, model.lift(h.matrix)), OperatorRole::Hermitian};
}

DenseOperator build_quasi_L_fock(const FockBasis& basis, const FockModel& model, std::size_t axis,
                                 Component component) {
  check_basis(basis, model);
  const QuasiAngularMomentum l = quasi_L(model.dims(), axis, component);
  return {second_quantize(basis, model.lift(l.op.matrix)), OperatorRole::Hermitian};
}

DenseOperator build_onsite_repulsion(const FockBasis& basis, double strength) {
  if (basis.statistics() == Statistics::Fermion) {
    throw Error(ErrorKind::WrongStatistics, "on-site repulsion needs a bosonic basis");
  }
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double pairs = 0.0;
    for (std::uint8_t n : basis.state(static_cast<std::size_t>(i))) {
      pairs += static_cast<double>(n) * (static_cast<double>(n) - 1.0);
    }
    out(i, i) = strength * pairs;
  }
  return {std::move(out), OperatorRole::Hermitian};
}

DenseOperator build_total_spin(const FockBasis& basis, const FockModel& model,
                               Component component) {
  check_basis(basis, model);
  if (!model.spinful()) {
    throw Error(ErrorKind::WrongStatistics, "total spin needs a spinful model");
  }
  // Pauli/2 in the (up, down) ordering.
  Eigen::Matrix2cd half_pauli;
  switch (component) {
    case Component::X: half_pauli << 0.0, 0.5, 0.5, 0.0; break;
    case Component::Y: half_pauli << 0.0, Complex(0.0, -0.5), Complex(0.0, 0.5), 0.0; break;
    case Component::Z: half_pauli << 0.5, 0.0, 0.0, -0.5; break;
  }
  const auto sites = static_cast<Eigen::Index>(model.dims().site_count());
  const Eigen::MatrixXcd mode_op =
      Eigen::kroneckerProduct(Eigen::MatrixXcd::Identity(sites, sites), half_pauli).eval();
  return {second_quantize(basis, mode_op), OperatorRole::Hermitian};
}

}  // namespace pft
