#include "pft/wigner.hpp"

#include <complex>

#if defined(PFT_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace pft {

#if defined(PFT_HAVE_QUADMATH)
namespace detail {
__float128 cos_of(__float128 x) { return cosq(x); }
__float128 sin_of(__float128 x) { return sinq(x); }
__float128 sqrt_of(__float128 x) { return sqrtq(x); }
}  // namespace detail
#endif

WignerD wigner_d(int two_l, double beta) {
#if defined(PFT_HAVE_QUADMATH)
  if (two_l > 40) return {two_l, beta, wigner_d_sum<__float128>(two_l, beta)};
#endif
  return {two_l, beta, wigner_d_sum<long double>(two_l, beta)};
}

WignerD wigner_d_oracle(int two_l, double beta) {
  if (two_l < 0) {
    throw Error(ErrorKind::InvalidArgument, "2l must be nonnegative, got " + std::to_string(two_l));
  }
  if (two_l > kMaxTwoL) {
    throw Error(ErrorKind::UnsupportedSize,
                "oracle supports 2l <= " + std::to_string(kMaxTwoL));
  }
  const int dim = two_l + 1;
  // J_y = (J+ - J-) / 2i with <m+1|J+|m> = sqrt((l-m)(l+m+1)); for r = l + m this
  // is sqrt((2l - r)(r + 1)).
  Eigen::MatrixXcd jy = Eigen::MatrixXcd::Zero(dim, dim);
  for (int r = 0; r + 1 < dim; ++r) {
    const double ladder = std::sqrt(static_cast<double>((two_l - r) * (r + 1)));
    jy(r + 1, r) = Complex(0.0, -0.5 * ladder);
    jy(r, r + 1) = Complex(0.0, 0.5 * ladder);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(jy);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "J_y eigendecomposition failed");
  }
  const Eigen::VectorXcd phases =
      (solver.eigenvalues().cast<Complex>() * Complex(0.0, -beta)).array().exp();
  const Eigen::MatrixXcd d =
      solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
  return {two_l, beta, d.real()};
}

Complex quarter_turn_phase(HalfInteger m_prime, HalfInteger m) {
  const HalfInteger diff = m_prime - m;
  if (!diff.is_integer()) {
    throw Error(ErrorKind::RepresentationMismatch,
                "m' - m must be an integer, got " + std::to_string(diff.value()));
  }
  return i_power(diff.twice() / 2);
}

}  // namespace pft
