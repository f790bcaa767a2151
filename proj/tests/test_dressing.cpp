#include "doctest.h"

#include <cmath>
#include <numbers>

#include "pft/dressing.hpp"
#include "pft/error.hpp"

using namespace pft;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("identity dressing") {
  const std::vector<double> unit{1.0, 1.0};
  const auto h = lattice_hamiltonian(LatticeDims{2, 3}, unit);
  const auto w = DenseOperator::unitary(Eigen::MatrixXcd::Identity(6, 6));
  CHECK(max_abs(dress(h, w).matrix - h.matrix) == 0.0);
  CHECK(max_abs(lz_dressing_unitary(LatticeDims{2, 3}, 0.0).matrix - w.matrix) == 0.0);
  CHECK_THROWS_AS(dress(h, DenseOperator::unitary(Eigen::MatrixXcd::Identity(4, 4))), Error);
}

TEST_CASE("Lz rotation mixes Lx into Ly") {
  const LatticeDims dims{3, 4};
  const double j = 1.3;
  const double theta = 0.7;
  Eigen::MatrixXcd lx = Eigen::MatrixXcd::Zero(12, 12);
  Eigen::MatrixXcd ly = Eigen::MatrixXcd::Zero(12, 12);
  for (std::size_t a = 0; a < 2; ++a) {
    lx += quasi_L(dims, a, Component::X).op.matrix;
    ly += quasi_L(dims, a, Component::Y).op.matrix;
  }
  const auto h = DenseOperator::hermitian(j * lx);
  const auto dressed = dress(h, lz_dressing_unitary(dims, theta)).matrix;
  CHECK(max_abs(dressed - (std::cos(theta) * j * lx + std::sin(theta) * j * ly)) < 1e-10);
}

TEST_CASE("Lz phases") {
  const LatticeDims dims{3, 4};
  const double theta = 0.4;
  const auto w = lz_dressing_unitary(dims, theta).matrix;
  for (std::size_t i = 0; i < dims.site_count(); ++i) {
    const SiteIndex s = unflatten(i, dims);
    const double m = magnetic_number(s.coords[0], 3).value() + magnetic_number(s.coords[1], 4).value();
    CHECK(std::abs(w(i, i) - std::polar(1.0, -theta * m)) < 1e-15);
  }
  const FockModel model(dims, Statistics::Boson);
  CHECK(lz_dressing_unitary(enumerate_basis(model, 0), model, theta).matrix(0, 0) == Complex(1, 0));
  CHECK(max_abs(lz_dressing_unitary(enumerate_basis(model, 1), model, theta).matrix - w) < 1e-15);
}

TEST_CASE("random unitaries") {
  const auto a = random_unitary(8, 11);
  CHECK(unitarity_error(a.matrix) < 1e-12);
  CHECK(max_abs(a.matrix - random_unitary(8, 11).matrix) == 0.0);
  CHECK(max_abs(a.matrix - random_unitary(8, 12).matrix) > 0.1);
}

TEST_CASE("dressed transfer") {
  const std::vector<ModeIndex> corner{{{1, 1}, Spin::None}};
  const auto f = PolynomialFunction::variable(0);

  const FockModel square(LatticeDims{3, 3}, Statistics::Boson);
  const auto bare = function_transfer_check(square, f, corner, kPi);
  const auto trivial = dressed_transfer_check(
      square, GenericDressing{DenseOperator::unitary(Eigen::MatrixXcd::Identity(9, 9))}, f, corner,
      kPi);
  CHECK(trivial.transfer.fidelity == doctest::Approx(bare.fidelity));

  const auto lz = dressed_transfer_check(square, LzRotation{0.7}, f, corner, kPi);
  CHECK(std::abs(lz.transfer.fidelity - 1.0) < 1e-10);
  CHECK(std::abs(lz.source_dressing_phase - std::polar(1.0, 0.7 * 2.0)) < 1e-14);
  CHECK(std::abs(lz.target_dressing_phase - std::polar(1.0, -0.7 * 2.0)) < 1e-14);
  CHECK(std::abs(lz.quoted_phase - std::polar(1.0, -0.7 * 7.0)) < 1e-14);

  const FockModel strip(LatticeDims{2, 4}, Statistics::Boson);
  const auto generic = dressed_transfer_check(strip, GenericDressing{random_unitary(8, 5)}, f,
                                              corner, kPi);
  CHECK(std::abs(generic.transfer.fidelity - 1.0) < 1e-10);

  PolynomialFunction quadratic;
  quadratic.terms.push_back({1.0, {{0, 2}}});
  CHECK_THROWS_AS(dressed_transfer_check(strip, GenericDressing{random_unitary(8, 5)}, quadratic,
                                         corner, kPi),
                  Error);
}
