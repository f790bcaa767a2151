#include "doctest.h"

#include <cmath>
#include <numbers>

#include "pft/error.hpp"
#include "pft/fock.hpp"

using namespace pft;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

ModeIndex at(SiteIndex s, Spin spin = Spin::None) { return {std::move(s), spin}; }

}  // namespace

TEST_CASE("sector dimensions") {
  CHECK(enumerate_basis(LatticeDims{3, 3}, Statistics::Boson, false, 0).size() == 1);
  CHECK(enumerate_basis(LatticeDims{2, 2}, Statistics::Boson, false, 2).size() == 10);
  CHECK(enumerate_basis(LatticeDims{2}, Statistics::Fermion, true, 2).size() == 6);
  CHECK(enumerate_basis(LatticeDims{2, 2}, Statistics::HardCore, false, 2).size() == 6);
  CHECK(sector_dimension(Statistics::Boson, 9, 3) == 165);
  CHECK(sector_dimension(Statistics::Fermion, 4, 5) == 0);
  CHECK_THROWS_AS(enumerate_basis(LatticeDims{20, 20}, Statistics::Boson, false, 4), Error);
  CHECK_THROWS_AS(FockModel(LatticeDims{2}, Statistics::Boson, true), Error);
}

TEST_CASE("one particle sector follows site order") {
  const FockModel model(LatticeDims{2, 3}, Statistics::Fermion, true);
  const FockBasis b = enumerate_basis(model, 1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(b.state(i)[i] == 1);
    CHECK(model.mode_of(model.mode_at(i)) == i);
  }
  CHECK(model.mode_of(at({1, 2}, Spin::Down)) == 3);
}

TEST_CASE("ladder operators") {
  const auto boson = apply_creation({1, 0}, 0, Statistics::Boson);
  CHECK(boson.state == OccupationState{2, 0});
  CHECK(boson.factor == doctest::Approx(std::sqrt(2.0)));

  const auto fermion = apply_creation({1, 0}, 1, Statistics::Fermion);
  CHECK(fermion.state == OccupationState{1, 1});
  CHECK(fermion.factor == -1.0);
  CHECK(apply_creation({1, 0}, 0, Statistics::Fermion).factor == 0.0);
  CHECK(apply_creation({1, 0}, 0, Statistics::HardCore).factor == 0.0);
  CHECK(apply_creation({0, 1}, 0, Statistics::HardCore).factor == 1.0);

  const auto down = apply_annihilation({2, 1}, 0, Statistics::Boson);
  CHECK(down.state == OccupationState{1, 1});
  CHECK(down.factor == doctest::Approx(std::sqrt(2.0)));
  CHECK(apply_annihilation({0, 1}, 0, Statistics::Boson).factor == 0.0);
  CHECK(apply_annihilation({1, 1}, 1, Statistics::Fermion).factor == -1.0);
}

TEST_CASE("hopping in fixed number sectors") {
  const LatticeDims dims{3, 4};
  const std::vector<double> unit{1.0, 1.0};
  const FockModel model(dims, Statistics::Boson);
  CHECK(max_abs(build_hopping(enumerate_basis(model, 1), model, unit).matrix -
                lattice_hamiltonian(dims, unit).matrix) < 1e-14);
  CHECK(max_abs(build_hopping(enumerate_basis(model, 0), model, unit).matrix) == 0.0);

  // bosons on two sites, basis (2,0) (1,1) (0,2)
  const FockModel pair(LatticeDims{2}, Statistics::Boson);
  const std::vector<double> one{1.0};
  const auto h = build_hopping(enumerate_basis(pair, 2), pair, one).matrix;
  const double c = -1.0 / std::sqrt(2.0);
  Eigen::Matrix3cd expected;
  expected << 0, c, 0, c, 0, c, 0, c, 0;
  CHECK(max_abs(h - expected) < 1e-15);
}

TEST_CASE("quasi angular momentum commutes across axes except for hard-core particles") {
  const LatticeDims dims{2, 2};
  for (auto stats : {Statistics::Boson, Statistics::Fermion}) {
    const FockModel model(dims, stats);
    const FockBasis b = enumerate_basis(model, 2);
    CHECK(commutator_norm(build_quasi_L_fock(b, model, 0, Component::X),
                          build_quasi_L_fock(b, model, 1, Component::X)) < 1e-12);
  }
  const FockModel hc(dims, Statistics::HardCore);
  const FockBasis b = enumerate_basis(hc, 2);
  const double norm = commutator_norm(build_quasi_L_fock(b, hc, 0, Component::X),
                                      build_quasi_L_fock(b, hc, 1, Component::X));
  // independent enumeration of the 6-state capped-boson sector gives 1/2
  CHECK(norm == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("on-site repulsion") {
  const FockModel model(LatticeDims{2, 2}, Statistics::Boson);
  CHECK(max_abs(build_onsite_repulsion(enumerate_basis(model, 1), 10.0).matrix) == 0.0);
  CHECK(max_abs(build_onsite_repulsion(enumerate_basis(model, 0), 10.0).matrix) == 0.0);
  const FockBasis b = enumerate_basis(model, 2);
  const auto u = build_onsite_repulsion(b, 3.0).matrix;
  const auto doubled = b.index_of({2, 0, 0, 0});
  REQUIRE(doubled);
  CHECK(u(*doubled, *doubled) == Complex(6.0, 0.0));
  const FockModel fermions(LatticeDims{2}, Statistics::Fermion);
  CHECK_THROWS_AS(build_onsite_repulsion(enumerate_basis(fermions, 1), 1.0), Error);
}

TEST_CASE("total spin") {
  const FockModel model(LatticeDims{2, 2}, Statistics::Fermion, true);
  const FockBasis one = enumerate_basis(model, 1);
  const auto sz = build_total_spin(one, model, Component::Z).matrix;
  CHECK(sz(0, 0) == Complex(0.5, 0.0));
  CHECK(sz(1, 1) == Complex(-0.5, 0.0));
  const FockBasis two = enumerate_basis(model, 2);
  for (auto c : {Component::X, Component::Y, Component::Z}) {
    for (std::size_t axis : {0, 1}) {
      CHECK(commutator_norm(build_total_spin(two, model, c),
                            build_quasi_L_fock(two, model, axis, Component::X)) < 1e-12);
    }
  }
  const FockModel spinless(LatticeDims{2}, Statistics::Fermion);
  CHECK_THROWS_AS(build_total_spin(enumerate_basis(spinless, 1), spinless, Component::Z), Error);
}

TEST_CASE("states from functions") {
  const FockModel model(LatticeDims{3, 3}, Statistics::Boson);
  const std::vector<ModeIndex> corner{at({1, 1})};

  const FockState linear = state_from_function(model, PolynomialFunction::variable(0), corner);
  REQUIRE(linear.sectors.size() == 1);
  CHECK(linear.sectors[0].basis->particles() == 1);
  CHECK(std::abs(linear.sectors[0].amplitudes(0) - Complex(1, 0)) < 1e-15);

  // 1 + x^2 / sqrt(2): vacuum and double occupation with equal weight
  PolynomialFunction f = PolynomialFunction::constant(1.0);
  f.terms.push_back({1.0 / std::sqrt(2.0), {{0, 2}}});
  const FockState s = state_from_function(model, f, corner);
  CHECK(s.norm() == doctest::Approx(1.0));
  CHECK(std::abs(s.sector(0)->amplitudes(0)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(s.sector(2)->amplitudes(0)) == doctest::Approx(1.0 / std::sqrt(2.0)));

  const FockModel fermions(LatticeDims{2}, Statistics::Fermion);
  PolynomialFunction square;
  square.terms.push_back({1.0, {{0, 2}}});
  CHECK_THROWS_AS(state_from_function(fermions, square, std::vector<ModeIndex>{at({1})}), Error);

  const FockModel spinful(LatticeDims{2, 2}, Statistics::Fermion, true);
  PolynomialFunction onsite = PolynomialFunction::constant(0.5);
  onsite.terms.push_back({0.5, {{0, 1}}});
  onsite.terms.push_back({0.5, {{1, 1}}});
  onsite.terms.push_back({0.5, {{1, 1}, {0, 1}}});
  const std::vector<ModeIndex> up_down{at({1, 1}, Spin::Up), at({1, 1}, Spin::Down)};
  const FockState general = state_from_function(spinful, onsite, up_down);
  CHECK(general.sectors.size() == 3);
  CHECK(general.norm() == doctest::Approx(1.0));
}

TEST_CASE("evolution") {
  const FockModel model(LatticeDims{3, 3}, Statistics::Boson);
  const std::vector<double> unit{1.0, 1.0};
  const std::vector<ModeIndex> corner{at({1, 1})};
  const FockState s = state_from_function(model, PolynomialFunction::variable(0), corner);
  const auto h = build_hopping(*s.sectors[0].basis, model, unit);
  const FockVector same = evolve_fock(s.sectors[0], h, 0.0);
  CHECK((same.amplitudes - s.sectors[0].amplitudes).norm() < 1e-15);
  const FockVector moved = evolve_fock(s.sectors[0], h, kPi);
  CHECK(std::abs(moved.amplitudes(8)) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("function transfer") {
  const std::vector<ModeIndex> corner{at({1, 1})};
  for (auto dims : {LatticeDims{2, 2}, LatticeDims{3, 4}, LatticeDims{4, 4}}) {
    const FockModel model(dims, Statistics::Boson);
    const auto r = function_transfer_check(model, PolynomialFunction::variable(0), corner, kPi);
    CHECK(std::abs(r.fidelity - 1.0) < 1e-9);
  }

  PolynomialFunction f = PolynomialFunction::constant(0.5);
  f.terms.push_back({0.6, {{0, 1}}});
  f.terms.push_back({Complex(0, 0.3), {{0, 2}}});
  const FockModel model(LatticeDims{3, 3}, Statistics::Boson);
  const auto r = function_transfer_check(model, f, corner, kPi);
  CHECK(std::abs(r.fidelity - 1.0) < 1e-8);
  CHECK(r.rigidity_residual < 1e-10);
  // (r1 r2)^2 = 1 on 3x3
  for (const auto& [n, phase] : r.sector_phases) CHECK(std::abs(phase - Complex(1, 0)) < 1e-10);

  // at t0/2 only a quarter of each axis amplitude arrives:
  // (0.25 + 0.36/4 + 0.18/16) / 0.79
  const auto half = function_transfer_check(model, f, corner, kPi / 2);
  CHECK(half.fidelity == doctest::Approx(0.35125 / 0.79).epsilon(1e-12));
  CHECK(half.fidelity == doctest::Approx(0.44462025316455722).epsilon(1e-12));
}

TEST_CASE("transfer without initializing the interior") {
  const FockModel model(LatticeDims{3, 3}, Statistics::Boson);
  const std::vector<ModeIndex> corner{at({1, 1})};
  const auto f = PolynomialFunction::variable(0);

  const auto vacuum = no_init_transfer_check(model, f, corner, PolynomialFunction::constant(1.0),
                                             std::vector<ModeIndex>{}, kPi);
  const auto plain = function_transfer_check(model, f, corner, kPi);
  CHECK(vacuum.mirrored.fidelity == doctest::Approx(plain.fidelity));

  const auto edge = no_init_transfer_check(model, f, corner, PolynomialFunction::variable(0),
                                           std::vector<ModeIndex>{at({2, 1})}, kPi);
  CHECK(std::abs(edge.mirrored.fidelity - 1.0) < 1e-9);

  PolynomialFunction g = PolynomialFunction::constant(0.6);
  g.terms.push_back({Complex(0, 0.8), {{0, 2}}});
  const auto center =
      no_init_transfer_check(model, f, corner, g, std::vector<ModeIndex>{at({2, 2})}, kPi);
  CHECK(std::abs(center.mirrored.fidelity - 1.0) < 1e-9);

  CHECK_THROWS_AS(no_init_transfer_check(model, f, corner, f, corner, kPi), Error);
}

TEST_CASE("spinful fermion transfers") {
  const LatticeDims dims{2, 3};
  const SiteIndex source{1, 1};
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(qubit_transfer_check(dims, 1.0, 0.0, 0.0, 0.0, source, kPi).fidelity ==
        doctest::Approx(1.0));
  CHECK(std::abs(qubit_transfer_check(dims, 0.0, h, h, 0.0, source, kPi).fidelity - 1.0) < 1e-10);
  CHECK(std::abs(qubit_transfer_check(LatticeDims{2, 2}, 0.5, Complex(0, 0.5), -0.5, 0.5, source,
                                      kPi)
                     .fidelity -
                 1.0) < 1e-10);
  CHECK_THROWS_AS(qubit_transfer_check(dims, 1.0, 1.0, 0.0, 0.0, source, kPi), Error);

  CHECK(std::abs(entangled_transfer_check(dims, 1.0, 0.0, kPi).fidelity - 1.0) < 1e-10);
  CHECK(std::abs(entangled_transfer_check(dims, h, h, kPi).fidelity - 1.0) < 1e-10);
  CHECK(std::abs(entangled_transfer_check(LatticeDims{2, 2}, 0.5, std::sqrt(3.0) / 2, kPi).fidelity -
                 1.0) < 1e-10);
}

TEST_CASE("hard-core equivalence for single excitations") {
  const std::vector<double> strong{50.0};
  const auto vac = hardcore_equivalence_check(LatticeDims{3, 3}, 1.0, 0.0, strong, kPi);
  CHECK(vac.transfer.fidelity == doctest::Approx(1.0));
  const auto one = hardcore_equivalence_check(LatticeDims{3, 3}, 0.0, 1.0, strong, kPi);
  CHECK(one.max_deviation < 1e-10);
  CHECK(std::abs(one.transfer.fidelity - 1.0) < 1e-10);
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<double> medium{10.0};
  const auto mix = hardcore_equivalence_check(LatticeDims{2, 2}, h, h, medium, kPi);
  CHECK(mix.max_deviation < 1e-10);
  CHECK(std::abs(mix.transfer.fidelity - 1.0) < 1e-10);
}
