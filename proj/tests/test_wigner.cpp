#include "doctest.h"

#include <cmath>
#include <numbers>

#include "pft/wigner.hpp"

using namespace pft;

TEST_CASE("trivial representations") {
  CHECK(wigner_d(0, 1.3).matrix(0, 0) == doctest::Approx(1.0));
  CHECK(wigner_d_oracle(0, 1.3).matrix(0, 0) == doctest::Approx(1.0));
  CHECK(wigner_d_oracle(2, 0.0).matrix.isApprox(Eigen::Matrix3d::Identity(), 1e-14));
  CHECK(wigner_d(6, 0.0).matrix.isApprox(Eigen::MatrixXd::Identity(7, 7), 1e-15));
}

TEST_CASE("spin one half closed form") {
  // exp(-i beta J_y) with m = -1/2, +1/2
  const double beta = 0.83;
  const double c = std::cos(beta / 2);
  const double s = std::sin(beta / 2);
  Eigen::Matrix2d expected;
  expected << c, s, -s, c;
  CHECK((wigner_d(1, beta).matrix - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((wigner_d_oracle(1, beta).matrix - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("frozen l = 3/2 values") {
  // scipy expm of -i 0.9 J_y; the (3/2, -1/2) entry agrees with sympy's Rotation.d
  Eigen::Matrix4d expected;
  expected << 0.7300869985377682, 0.6108462086273663, 0.2950723553901306, 0.08229331112675788,
      -0.6108462086273664, 0.38936679090795034, 0.6230511348421868, 0.2950723553901306,
      0.29507235539013066, -0.6230511348421869, 0.38936679090795034, 0.6108462086273664,
      -0.08229331112675788, 0.2950723553901306, -0.6108462086273663, 0.7300869985377683;
  CHECK((wigner_d(3, 0.9).matrix - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("beta = pi is antidiagonal") {
  const auto d = wigner_d(4, std::numbers::pi).matrix;
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) {
      const double expected = (r + c == 4) ? ((c % 2 == 0) ? 1.0 : -1.0) : 0.0;
      CHECK(std::abs(d(r, c) - expected) < 1e-14);
    }
  }
}

TEST_CASE("factorial sum agrees with the eigensolver") {
  for (int two_l = 0; two_l <= 40; two_l += 3) {
    for (double beta : {0.1, 1.0, 2.5, 3.0}) {
      const double diff =
          (wigner_d(two_l, beta).matrix - wigner_d_oracle(two_l, beta).matrix).cwiseAbs().maxCoeff();
      CHECK(diff < 1e-12);
    }
  }
}

TEST_CASE("large representations stay orthogonal") {
  for (int two_l : {45, 50, 60}) {
    const auto d = wigner_d(two_l, 1.9).matrix;
    const auto n = d.rows();
    CHECK((d.transpose() * d - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(wigner_d(kMaxTwoL + 1, 1.0), Error);
  CHECK_THROWS_AS(wigner_d(-1, 1.0), Error);
}

TEST_CASE("composition and symmetry") {
  const auto a = wigner_d(7, 0.4).matrix;
  const auto b = wigner_d(7, 1.1).matrix;
  CHECK((a * b - wigner_d(7, 1.5).matrix).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((wigner_d(7, -0.4).matrix - a.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  // 2 pi rotation of a spinor flips the sign
  CHECK((wigner_d(5, 2 * std::numbers::pi).matrix + Eigen::MatrixXd::Identity(6, 6))
            .cwiseAbs()
            .maxCoeff() < 1e-13);
}

TEST_CASE("quarter turn phases") {
  const auto h = [](int twice) { return HalfInteger::from_twice(twice); };
  CHECK(quarter_turn_phase(h(4), h(4)) == Complex(1, 0));
  CHECK(quarter_turn_phase(h(-2), h(2)) == Complex(-1, 0));
  CHECK(quarter_turn_phase(h(3), h(-1)) == Complex(-1, 0));
  CHECK_THROWS_AS(quarter_turn_phase(h(1), h(2)), Error);
}
