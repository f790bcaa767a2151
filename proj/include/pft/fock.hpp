#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pft/core_algebra.hpp"
#include "pft/lattice_dynamics.hpp"

namespace pft {

enum class Statistics { Boson, Fermion, HardCore };
enum class Spin { None, Up, Down };

std::string_view to_string(Statistics statistics);

/// Fixed-number sectors larger than this are refused at enumeration.
inline constexpr std::size_t kMaxSectorDim = 200000;

struct ModeIndex {
  SiteIndex site;
  Spin spin = Spin::None;

  bool operator==(const ModeIndex&) const = default;
};

/// Lattice, particle statistics and spin flavor. Modes are ordered row-major
/// over sites with spin up before spin down inside a site.
class FockModel {
 public:
  FockModel(LatticeDims dims, Statistics statistics, bool spinful = false);

  const LatticeDims& dims() const noexcept { return dims_; }
  Statistics statistics() const noexcept { return statistics_; }
  bool spinful() const noexcept { return spinful_; }
  std::size_t modes_per_site() const noexcept { return spinful_ ? 2 : 1; }
  std::size_t mode_count() const noexcept { return dims_.site_count() * modes_per_site(); }

  std::size_t mode_of(const ModeIndex& mode) const;
  ModeIndex mode_at(std::size_t index) const;
  ModeIndex mirror(const ModeIndex& mode) const;

  /// Lifts a site-space operator to mode space (h (x) I_spin when spinful).
  Eigen::MatrixXcd lift(const Eigen::MatrixXcd& site_operator) const;

 private:
  LatticeDims dims_;
  Statistics statistics_;
  bool spinful_;
};

/// Occupation number of each mode in canonical order.
using OccupationState = std::vector<std::uint8_t>;

struct OccupationHash {
  std::size_t operator()(const OccupationState& s) const noexcept;
};

/// All occupation configurations with a fixed particle number, in descending
/// lexicographic order of the occupancy vector, so the one-particle sector
/// lists modes in canonical order.
class FockBasis {
 public:
  FockBasis(Statistics statistics, std::size_t mode_count, int particles);

  Statistics statistics() const noexcept { return statistics_; }
  std::size_t mode_count() const noexcept { return mode_count_; }
  int particles() const noexcept { return particles_; }
  std::size_t size() const noexcept { return states_.size(); }
  const OccupationState& state(std::size_t i) const { return states_.at(i); }
  const std::vector<OccupationState>& states() const noexcept { return states_; }
  std::optional<std::size_t> index_of(const OccupationState& s) const;

 private:
  Statistics statistics_;
  std::size_t mode_count_;
  int particles_;
  std::vector<OccupationState> states_;
  std::unordered_map<OccupationState, std::size_t, OccupationHash> index_;
};

/// Number of states in a sector without enumerating it.
std::uint64_t sector_dimension(Statistics statistics, std::size_t mode_count, int particles);

FockBasis enumerate_basis(const FockModel& model, int particles);
FockBasis enumerate_basis(const LatticeDims& dims, Statistics statistics, bool spinful,
                          int particles);

/// Result of applying a ladder operator: the new configuration and the
/// matrix-element factor (zero when the state is annihilated).
struct LadderResult {
  OccupationState state;
  double factor = 0.0;
};

LadderResult apply_creation(const OccupationState& state, std::size_t mode, Statistics statistics);
LadderResult apply_annihilation(const OccupationState& state, std::size_t mode,
                                Statistics statistics);

/// Matrix of sum_{ij} h_ij a_i^dagger a_j in the sector; h lives in mode space.
Eigen::MatrixXcd second_quantize(const FockBasis& basis, const Eigen::MatrixXcd& mode_operator);

DenseOperator build_hopping(const FockBasis& basis, const FockModel& model,
                            std::span<const double> scales);
DenseOperator build_quasi_L_fock(const FockBasis& basis, const FockModel& model, std::size_t axis,
                                 Component component);
/// strength * sum_modes n (n - 1); bosonic and hard-core bases only.
DenseOperator build_onsite_repulsion(const FockBasis& basis, double strength);
/// Total spin component; spinful models only.
DenseOperator build_total_spin(const FockBasis& basis, const FockModel& model,
                               Component component);

/// Polynomial in abstract variables x_0, x_1, ...; variable v is bound to a
/// mode when the polynomial is turned into a state. Factors within a monomial
/// are applied right to left to the vacuum, which fixes fermionic signs.
struct Monomial {
  Complex coefficient{1.0, 0.0};
  std::vector<std::pair<int, int>> factors;  // (variable, power)

  int degree() const;
};

struct PolynomialFunction {
  std::vector<Monomial> terms;

  int variable_count() const;
  int max_degree() const;

  static PolynomialFunction constant(Complex c);
  static PolynomialFunction variable(int v, Complex c = {1.0, 0.0});

  /// Product with variables of rhs shifted past those of lhs.
  friend PolynomialFunction tensor(const PolynomialFunction& lhs, const PolynomialFunction& rhs);
  friend PolynomialFunction operator+(PolynomialFunction lhs, const PolynomialFunction& rhs);
};

struct FockVector {
  std::shared_ptr<const FockBasis> basis;
  Eigen::VectorXcd amplitudes;
};

/// Direct sum of fixed-number sector vectors, ordered by particle number.
struct FockState {
  std::vector<FockVector> sectors;

  double norm() const;
  const FockVector* sector(int particles) const;
};

/// f(a^dagger_{anchors})|0>, normalized.
FockState state_from_function(const FockModel& model, const PolynomialFunction& f,
                              std::span<const ModeIndex> anchors);

FockVector evolve_fock(const FockVector& state, const DenseOperator& hamiltonian, double t);

using SectorHamiltonian = std::function<DenseOperator(const FockBasis&)>;

FockState evolve(const FockState& state, const SectorHamiltonian& hamiltonian, double t);

/// Overlap comparison allowing one unit phase per particle-number sector.
struct TransferReport {
  double fidelity = 0.0;  // sum over sectors of |<target_n|evolved_n>|
  double rigid_fidelity = 0.0;  // |sum_n phase^{-n} <target_n|evolved_n>|
  Complex per_particle_phase{1.0, 0.0};
  std::vector<std::pair<int, Complex>> sector_phases;
  double rigidity_residual = 0.0;  // max_n |sector_phase_n - phase^n|
};

TransferReport compare_up_to_sector_phases(const FockState& evolved, const FockState& target);

/// Evolves f(anchors)|0> under the sector-lifted single-particle Hamiltonian
/// for time t and compares with f(targets)|0>.
TransferReport transfer_check(const FockModel& model, const DenseOperator& single_particle,
                              const PolynomialFunction& f, std::span<const ModeIndex> anchors,
                              std::span<const ModeIndex> targets, double t);

/// Engineered couplings with equal J on every axis; targets are the mirrors
/// of the anchors.
TransferReport function_transfer_check(const FockModel& model, const PolynomialFunction& f,
                                       std::span<const ModeIndex> anchors, double t,
                                       double scale = 1.0);

struct NoInitReport {
  TransferReport mirrored;  // g's content expected at its mirrored sites
  TransferReport static_interior;  // g's content expected to stay put
};

NoInitReport no_init_transfer_check(const FockModel& model, const PolynomialFunction& f,
                                    std::span<const ModeIndex> f_anchors,
                                    const PolynomialFunction& g,
                                    std::span<const ModeIndex> g_anchors, double t,
                                    double scale = 1.0);

/// (alpha + beta c_up^dagger + gamma c_down^dagger + delta c_up^dagger c_down^dagger)|0>
/// at source, spinful fermions.
TransferReport qubit_transfer_check(const LatticeDims& dims, Complex alpha, Complex beta,
                                    Complex gamma, Complex delta, const SiteIndex& source,
                                    double t, double scale = 1.0);

/// beta|0>_{s}|0>_{s+e2} + gamma|1>_{s}|1>_{s+e2} with |0> = up, |1> = down,
/// s = (1,1,...) and e2 the unit step along axis 1.
TransferReport entangled_transfer_check(const LatticeDims& dims, Complex beta, Complex gamma,
                                        double t, double scale = 1.0);

struct HardcoreReport {
  double max_deviation = 0.0;  // max over strengths of ||psi_U(t) - psi_0(t)||_max
  TransferReport transfer;  // worst case over strengths
};

/// alpha|0> + beta b_{1..1}^dagger|0> evolved with hopping plus H_U for each
/// strength, bosonic statistics.
HardcoreReport hardcore_equivalence_check(const LatticeDims& dims, Complex alpha, Complex beta,
                                          std::span<const double> strengths, double t,
                                          double scale = 1.0);

}  // namespace pft
