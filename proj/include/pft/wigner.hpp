#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pft/core_algebra.hpp"
#include "pft/error.hpp"

namespace pft {

/// Largest supported 2l. Beyond it the factorial sum loses too many digits.
inline constexpr int kMaxTwoL = 60;

/// Small Wigner d^l_{m'm}(beta) = <l m'| exp(-i beta J_y) |l m>.
/// Rows and columns run over m = -l .. +l ascending.
struct WignerD {
  int two_l = 0;
  double beta = 0.0;
  Eigen::MatrixXd matrix;

  Eigen::Index dim() const noexcept { return matrix.rows(); }
};

namespace detail {

// Overloads so the factorial sum can run in any floating type, including the
// GCC binary128 type which has no std:: math functions.
inline double cos_of(double x) { return std::cos(x); }
inline double sin_of(double x) { return std::sin(x); }
inline double sqrt_of(double x) { return std::sqrt(x); }
inline long double cos_of(long double x) { return std::cos(x); }
inline long double sin_of(long double x) { return std::sin(x); }
inline long double sqrt_of(long double x) { return std::sqrt(x); }
#if defined(PFT_HAVE_QUADMATH)
__float128 cos_of(__float128 x);
__float128 sin_of(__float128 x);
__float128 sqrt_of(__float128 x);
#endif

template <typename Scalar>
std::vector<Scalar> factorials(int count) {
  std::vector<Scalar> table(static_cast<std::size_t>(count), Scalar(1));
  for (int n = 1; n < count; ++n) {
    table[static_cast<std::size_t>(n)] = table[static_cast<std::size_t>(n - 1)] * Scalar(n);
  }
  return table;
}

template <typename Scalar>
std::vector<Scalar> powers(Scalar base, int count) {
  std::vector<Scalar> table(static_cast<std::size_t>(count), Scalar(1));
  for (int n = 1; n < count; ++n) {
    table[static_cast<std::size_t>(n)] = table[static_cast<std::size_t>(n - 1)] * base;
  }
  return table;
}

}  // namespace detail

/// Explicit factorial-sum evaluation of d^l(beta) with every intermediate in
/// Scalar; the result is rounded to double. Indices are r = l + m' (row) and
/// c = l + m (column).
template <typename Scalar>
Eigen::MatrixXd wigner_d_sum(int two_l, double beta) {
  if (two_l < 0) {
    throw Error(ErrorKind::InvalidArgument, "2l must be nonnegative, got " + std::to_string(two_l));
  }
  if (two_l > kMaxTwoL) {
    throw Error(ErrorKind::UnsupportedSize, "2l = " + std::to_string(two_l) +
                                                " exceeds supported maximum " +
                                                std::to_string(kMaxTwoL));
  }
  const int dim = two_l + 1;
  const auto fact = detail::factorials<Scalar>(dim + 1);
  const auto f = [&fact](int n) { return fact[static_cast<std::size_t>(n)]; };
  const Scalar half_beta = Scalar(beta) / Scalar(2);
  const auto cos_pow = detail::powers(detail::cos_of(half_beta), 2 * dim);
  const auto sin_pow = detail::powers(detail::sin_of(half_beta), 2 * dim);

  Eigen::MatrixXd d(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int col = 0; col < dim; ++col) {
      const Scalar norm = detail::sqrt_of(f(r) * f(two_l - r) * f(col) * f(two_l - col));
      const int k_min = std::max(0, col - r);
      const int k_max = std::min(col, two_l - r);
      Scalar sum(0);
      for (int k = k_min; k <= k_max; ++k) {
        const Scalar denom = f(col - k) * f(k) * f(r - col + k) * f(two_l - r - k);
        const Scalar term = cos_pow[static_cast<std::size_t>(two_l + col - r - 2 * k)] *
                            sin_pow[static_cast<std::size_t>(r - col + 2 * k)] / denom;
        // (-1)^{m'-m+k}
        if ((r - col + k) % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      d(r, col) = static_cast<double>(norm * sum);
    }
  }
  return d;
}

/// Primary evaluation path: factorial sum in 80-bit extended precision for
/// 2l <= 40 and binary128 above that (when available).
WignerD wigner_d(int two_l, double beta);

/// Independent oracle: exp(-i beta J_y) by Hermitian eigendecomposition of the
/// spin-l J_y matrix. Intended for verification only.
WignerD wigner_d_oracle(int two_l, double beta);

/// Exact i^{m'-m}; the difference must be an integer.
Complex quarter_turn_phase(HalfInteger m_prime, HalfInteger m);

}  // namespace pft
