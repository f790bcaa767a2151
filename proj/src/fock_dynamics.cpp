#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <string>

#include "pft/error.hpp"
#include "pft/fock.hpp"

namespace pft {

int Monomial::degree() const {
  int d = 0;
  for (const auto& [variable, power] : factors) d += power;
  return d;
}

int PolynomialFunction::variable_count() const {
  int count = 0;
  for (const Monomial& m : terms) {
    for (const auto& [variable, power] : m.factors) count = std::max(count, variable + 1);
  }
  return count;
}

int PolynomialFunction::max_degree() const {
  int d = 0;
  for (const Monomial& m : terms) d = std::max(d, m.degree());
  return d;
}

PolynomialFunction PolynomialFunction::constant(Complex c) { return {{Monomial{c, {}}}}; }

PolynomialFunction PolynomialFunction::variable(int v, Complex c) {
  return {{Monomial{c, {{v, 1}}}}};
}

PolynomialFunction tensor(const PolynomialFunction& lhs, const PolynomialFunction& rhs) {
  const int shift = lhs.variable_count();
  PolynomialFunction out;
  for (const Monomial& a : lhs.terms) {
    for (const Monomial& b : rhs.terms) {
      Monomial m{a.coefficient * b.coefficient, a.factors};
      for (const auto& [variable, power] : b.factors) m.factors.emplace_back(variable + shift, power);
      out.terms.push_back(std::move(m));
    }
  }
  return out;
}

PolynomialFunction operator+(PolynomialFunction lhs, const PolynomialFunction& rhs) {
  lhs.terms.insert(lhs.terms.end(), rhs.terms.begin(), rhs.terms.end());
  return lhs;
}

double FockState::norm() const {
  double sq = 0.0;
  for (const FockVector& v : sectors) sq += v.amplitudes.squaredNorm();
  return std::sqrt(sq);
}

const FockVector* FockState::sector(int particles) const {
  for (const FockVector& v : sectors) {
    if (v.basis->particles() == particles) return &v;
  }
  return nullptr;
}

FockState state_from_function(const FockModel& model, const PolynomialFunction& f,
                              std::span<const ModeIndex> anchors) {
  if (f.terms.empty()) {
    throw Error(ErrorKind::DegenerateFunction, "function has no terms");
  }
  if (static_cast<std::size_t>(f.variable_count()) > anchors.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "function uses " + std::to_string(f.variable_count()) + " variables but only " +
                    std::to_string(anchors.size()) + " anchor modes were given");
  }
  std::vector<std::size_t> modes;
  modes.reserve(anchors.size());
  for (const ModeIndex& a : anchors) modes.push_back(model.mode_of(a));

  std::map<int, std::unordered_map<OccupationState, Complex, OccupationHash>> collected;
  double coefficient_scale = 0.0;
  for (const Monomial& term : f.terms) {
    for (const auto& [variable, power] : term.factors) {
      if (variable < 0 || power < 0) {
        throw Error(ErrorKind::InvalidArgument, "negative variable index or power");
      }
    }
    coefficient_scale += std::abs(term.coefficient);
    OccupationState occ(model.mode_count(), 0);
    Complex amplitude = term.coefficient;
    for (auto it = term.factors.rbegin(); it != term.factors.rend() && amplitude != 0.0; ++it) {
      for (int p = 0; p < it->second; ++p) {
        const LadderResult r =
            apply_creation(occ, modes[static_cast<std::size_t>(it->first)], model.statistics());
        amplitude *= r.factor;
        occ = r.state;
        if (r.factor == 0.0) break;
      }
    }
    if (amplitude == 0.0) continue;
    collected[term.degree()][occ] += amplitude;
  }

  FockState state;
  for (auto& [particles, amplitudes] : collected) {
    auto basis = std::make_shared<const FockBasis>(enumerate_basis(model, particles));
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()));
    for (const auto& [occ, amplitude] : amplitudes) {
      v(static_cast<Eigen::Index>(*basis->index_of(occ))) += amplitude;
    }
    state.sectors.push_back({std::move(basis), std::move(v)});
  }
  const double norm = state.norm();
  if (!(norm > 1e-14 * std::max(1.0, coefficient_scale))) {
    throw Error(ErrorKind::DegenerateFunction, "function annihilates the vacuum");
  }
  for (FockVector& v : state.sectors) v.amplitudes /= norm;
  return state;
}

namespace {

// Eigendecomposition of one sector Hamiltonian, reusable across times.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const DenseOperator& h) {
    if (static_cast<std::size_t>(h.dim()) > kMaxDenseDim) {
      throw Error(ErrorKind::UnsupportedSize, "sector dimension " + std::to_string(h.dim()) +
                                                  " exceeds dense eigensolver limit " +
                                                  std::to_string(kMaxDenseDim));
    }
    solver_.compute(h.matrix);
    if (solver_.info() != Eigen::Success) {
      throw Error(ErrorKind::NumericalFailure, "sector eigendecomposition failed");
    }
  }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& psi, double t) const {
    const Eigen::VectorXcd phases =
        (solver_.eigenvalues().cast<Complex>() * Complex(0.0, -t)).array().exp();
    return solver_.eigenvectors() *
           (phases.asDiagonal() * (solver_.eigenvectors().adjoint() * psi));
  }

 private:
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver_;
};

}  // namespace

FockVector evolve_fock(const FockVector& state, const DenseOperator& hamiltonian, double t) {
  if (hamiltonian.dim() != state.amplitudes.size()) {
    throw Error(ErrorKind::DimensionMismatch, "Hamiltonian does not match the state's sector");
  }
  if (hamiltonian.dim() == 0) return state;
  return {state.basis, SpectralPropagator(hamiltonian).apply(state.amplitudes, t)};
}

FockState evolve(const FockState& state, const SectorHamiltonian& hamiltonian, double t) {
  FockState out;
  out.sectors.reserve(state.sectors.size());
  for (const FockVector& v : state.sectors) {
    out.sectors.push_back(evolve_fock(v, hamiltonian(*v.basis), t));
  }
  return out;
}

TransferReport compare_up_to_sector_phases(const FockState& evolved, const FockState& target) {
  constexpr double kWeightFloor = 1e-12;
  std::set<int> numbers;
  for (const FockVector& v : evolved.sectors) numbers.insert(v.basis->particles());
  for (const FockVector& v : target.sectors) numbers.insert(v.basis->particles());

  std::vector<std::pair<int, Complex>> overlaps;
  TransferReport report;
  for (int n : numbers) {
    const FockVector* e = evolved.sector(n);
    const FockVector* g = target.sector(n);
    Complex o{0.0, 0.0};
    if (e != nullptr && g != nullptr) {
      if (e->amplitudes.size() != g->amplitudes.size()) {
        throw Error(ErrorKind::DimensionMismatch, "sector bases differ for n = " + std::to_string(n));
      }
      o = g->amplitudes.dot(e->amplitudes);  // conjugates the target
    }
    overlaps.emplace_back(n, o);
    report.fidelity += std::abs(o);
    const Complex phase = std::abs(o) > kWeightFloor ? o / std::abs(o) : Complex(1.0, 0.0);
    report.sector_phases.emplace_back(n, phase);
  }

  const auto residual_for = [&](Complex phi) {
    double worst = 0.0;
    for (std::size_t i = 0; i < overlaps.size(); ++i) {
      if (std::abs(overlaps[i].second) <= kWeightFloor) continue;
      const Complex expected = std::pow(phi, overlaps[i].first);
      worst = std::max(worst, std::abs(report.sector_phases[i].second - expected));
    }
    return worst;
  };

  // Anchor the per-particle phase on the lowest populated n >= 1 sector and pick
  // the n-th root that best matches the rest.
  Complex best{1.0, 0.0};
  double best_residual = residual_for(best);
  for (std::size_t i = 0; i < overlaps.size(); ++i) {
    const int n = overlaps[i].first;
    if (n == 0 || std::abs(overlaps[i].second) <= kWeightFloor) continue;
    const double base = std::arg(report.sector_phases[i].second) / n;
    best_residual = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      const Complex candidate = std::polar(1.0, base + 2.0 * std::numbers::pi * k / n);
      const double r = residual_for(candidate);
      if (r < best_residual) {
        best_residual = r;
        best = candidate;
      }
    }
    break;
  }
  report.per_particle_phase = best;
  report.rigidity_residual = best_residual;
  Complex rigid{0.0, 0.0};
  for (const auto& [n, o] : overlaps) rigid += std::conj(std::pow(best, n)) * o;
  report.rigid_fidelity = std::abs(rigid);
  return report;
}

TransferReport transfer_check(const FockModel& model, const DenseOperator& single_particle,
                              const PolynomialFunction& f, std::span<const ModeIndex> anchors,
                              std::span<const ModeIndex> targets, double t) {
  const Eigen::MatrixXcd mode_h = model.lift(single_particle.matrix);
  const FockState source = state_from_function(model, f, anchors);
  const FockState target = state_from_function(model, f, targets);
  const FockState evolved = evolve(
      source,
      [&mode_h](const FockBasis& b) {
        return DenseOperator{second_quantize(b, mode_h), OperatorRole::Hermitian};
      },
      t);
  return compare_up_to_sector_phases(evolved, target);
}

namespace {

std::vector<double> equal_scales(const LatticeDims& dims, double scale) {
  return std::vector<double>(dims.rank(), scale);
}

std::vector<ModeIndex> mirrored(const FockModel& model, std::span<const ModeIndex> modes) {
  std::vector<ModeIndex> out;
  out.reserve(modes.size());
  for (const ModeIndex& m : modes) out.push_back(model.mirror(m));
  return out;
}

}  // namespace

TransferReport function_transfer_check(const FockModel& model, const PolynomialFunction& f,
                                       std::span<const ModeIndex> anchors, double t,
                                       double scale) {
  if (scale == 0.0) {
    throw Error(ErrorKind::DegenerateCoupling, "coupling scale J must be nonzero");
  }
  const auto scales = equal_scales(model.dims(), scale);
  const DenseOperator h = lattice_hamiltonian(model.dims(), scales);
  return transfer_check(model, h, f, anchors, mirrored(model, anchors), t);
}

NoInitReport no_init_transfer_check(const FockModel& model, const PolynomialFunction& f,
                                    std::span<const ModeIndex> f_anchors,
                                    const PolynomialFunction& g,
                                    std::span<const ModeIndex> g_anchors, double t,
                                    double scale) {
  const auto f_vars = static_cast<std::size_t>(f.variable_count());
  const auto g_vars = static_cast<std::size_t>(g.variable_count());
  if (f_vars > f_anchors.size() || g_vars > g_anchors.size()) {
    throw Error(ErrorKind::InvalidArgument, "not enough anchor modes for the functions");
  }
  std::set<std::size_t> f_modes;
  for (std::size_t i = 0; i < f_vars; ++i) f_modes.insert(model.mode_of(f_anchors[i]));
  for (std::size_t i = 0; i < g_vars; ++i) {
    if (f_modes.count(model.mode_of(g_anchors[i])) != 0) {
      throw Error(ErrorKind::OverlappingSupport, "f and g share a mode");
    }
  }
  const PolynomialFunction combined = tensor(f, g);
  std::vector<ModeIndex> anchors(f_anchors.begin(), f_anchors.begin() + static_cast<long>(f_vars));
  anchors.insert(anchors.end(), g_anchors.begin(), g_anchors.begin() + static_cast<long>(g_vars));

  const auto scales = equal_scales(model.dims(), scale);
  const DenseOperator h = lattice_hamiltonian(model.dims(), scales);

  std::vector<ModeIndex> static_targets = mirrored(model, anchors);
  for (std::size_t i = f_vars; i < anchors.size(); ++i) static_targets[i] = anchors[i];

  return {transfer_check(model, h, combined, anchors, mirrored(model, anchors), t),
          transfer_check(model, h, combined, anchors, static_targets, t)};
}

TransferReport qubit_transfer_check(const LatticeDims& dims, Complex alpha, Complex beta,
                                    Complex gamma, Complex delta, const SiteIndex& source,
                                    double t, double scale) {
  const double norm_sq = std::norm(alpha) + std::norm(beta) + std::norm(gamma) + std::norm(delta);
  if (std::abs(norm_sq - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument,
                "on-site state is not normalized: |a|^2+|b|^2+|c|^2+|d|^2 = " +
                    std::to_string(norm_sq));
  }
  const FockModel model(dims, Statistics::Fermion, true);
  const std::vector<ModeIndex> anchors{{source, Spin::Up}, {source, Spin::Down}};
  PolynomialFunction f;
  f.terms = {Monomial{alpha, {}}, Monomial{beta, {{0, 1}}}, Monomial{gamma, {{1, 1}}},
             Monomial{delta, {{0, 1}, {1, 1}}}};
  std::erase_if(f.terms, [](const Monomial& m) { return m.coefficient == 0.0; });
  return function_transfer_check(model, f, anchors, t, scale);
}

TransferReport entangled_transfer_check(const LatticeDims& dims, Complex beta, Complex gamma,
                                        double t, double scale) {
  if (dims.rank() < 2 || dims.extent(0) < 2 || dims.extent(1) < 2) {
    throw Error(ErrorKind::InvalidExtent, "entangled transfer needs a lattice of at least 2x2");
  }
  const FockModel model(dims, Statistics::Fermion, true);
  SiteIndex first(std::vector<int>(dims.rank(), 1));
  SiteIndex second = first;
  second.coords[1] = 2;
  const std::vector<ModeIndex> anchors{
      {first, Spin::Up}, {second, Spin::Up}, {first, Spin::Down}, {second, Spin::Down}};
  PolynomialFunction f;
  f.terms = {Monomial{beta, {{0, 1}, {1, 1}}}, Monomial{gamma, {{2, 1}, {3, 1}}}};
  std::erase_if(f.terms, [](const Monomial& m) { return m.coefficient == 0.0; });
  return function_transfer_check(model, f, anchors, t, scale);
}

HardcoreReport hardcore_equivalence_check(const LatticeDims& dims, Complex alpha, Complex beta,
                                          std::span<const double> strengths, double t,
                                          double scale) {
  const FockModel model(dims, Statistics::Boson);
  const std::vector<ModeIndex> anchors{{SiteIndex(std::vector<int>(dims.rank(), 1)), Spin::None}};
  const std::vector<ModeIndex> targets = mirrored(model, anchors);
  PolynomialFunction f;
  f.terms = {Monomial{alpha, {}}, Monomial{beta, {{0, 1}}}};
  std::erase_if(f.terms, [](const Monomial& m) { return m.coefficient == 0.0; });

  const FockState source = state_from_function(model, f, anchors);
  const FockState target = state_from_function(model, f, targets);
  const auto scales = equal_scales(dims, scale);
  const auto hopping = [&](const FockBasis& b) { return build_hopping(b, model, scales); };
  const FockState reference = evolve(source, hopping, t);

  HardcoreReport report;
  report.transfer.fidelity = 2.0;
  for (double u : strengths) {
    const FockState evolved = evolve(
        source,
        [&](const FockBasis& b) {
          DenseOperator h = hopping(b);
          h.matrix += build_onsite_repulsion(b, u).matrix;
          return h;
        },
        t);
    for (std::size_t i = 0; i < evolved.sectors.size(); ++i) {
      const Eigen::VectorXcd diff = evolved.sectors[i].amplitudes - reference.sectors[i].amplitudes;
      if (diff.size() > 0) {
        report.max_deviation = std::max(report.max_deviation, diff.cwiseAbs().maxCoeff());
      }
    }
    TransferReport r = compare_up_to_sector_phases(evolved, target);
    if (r.fidelity < report.transfer.fidelity) report.transfer = std::move(r);
  }
  if (strengths.empty()) report.transfer = compare_up_to_sector_phases(reference, target);
  return report;
}

}  // namespace pft
