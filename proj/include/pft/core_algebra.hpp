#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pft {

using Complex = std::complex<double>;

/// Rectangular lattice extents (M, N, K), one to three axes.
class LatticeDims {
 public:
  LatticeDims(std::initializer_list<int> extents);
  explicit LatticeDims(std::vector<int> extents);

  std::size_t rank() const noexcept { return extents_.size(); }
  int extent(std::size_t axis) const { return extents_.at(axis); }
  const std::vector<int>& extents() const noexcept { return extents_; }
  std::size_t site_count() const noexcept;

  /// Throws InvalidExtent unless every extent is at least 2.
  void require_transferable() const;

  bool operator==(const LatticeDims&) const = default;

 private:
  std::vector<int> extents_;
};

/// 1-based lattice coordinates.
struct SiteIndex {
  std::vector<int> coords;

  SiteIndex() = default;
  SiteIndex(std::initializer_list<int> c) : coords(c) {}
  explicit SiteIndex(std::vector<int> c) : coords(std::move(c)) {}

  bool operator==(const SiteIndex&) const = default;
};

void validate_site(const SiteIndex& site, const LatticeDims& dims);

/// Row-major flattening, axis 0 slowest. Zero-based result.
std::size_t flatten(const SiteIndex& site, const LatticeDims& dims);
SiteIndex unflatten(std::size_t index, const LatticeDims& dims);

/// Exact half-integer, stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
  static constexpr HalfInteger from_int(int value) { return HalfInteger(2 * value); }

  constexpr int twice() const noexcept { return twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
  constexpr double value() const noexcept { return 0.5 * twice_; }

  constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }
  constexpr HalfInteger operator+(HalfInteger o) const { return HalfInteger(twice_ + o.twice_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return HalfInteger(twice_ - o.twice_); }
  constexpr bool operator==(const HalfInteger&) const = default;

 private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// Engineered hopping amplitudes J * C_j along one axis, j = 1..M-1.
struct CouplingProfile {
  std::size_t axis = 0;
  double scale = 1.0;
  std::vector<double> values;

  int extent() const noexcept { return static_cast<int>(values.size()) + 1; }
};

/// Unit-modulus phase exp(-i*pi*(M-1)/2), exactly one of {1, i, -1, -i}.
struct SignaturePhase {
  int quarter_turns = 0;  // value = i^quarter_turns, in 0..3

  Complex value() const;
  SignaturePhase operator*(SignaturePhase o) const {
    return {(quarter_turns + o.quarter_turns) % 4};
  }
  SignaturePhase conj() const { return {(4 - quarter_turns) % 4}; }
  bool operator==(const SignaturePhase&) const = default;
};

/// Exact i^k for any integer k.
Complex i_power(int k);

CouplingProfile coupling_profile(int extent, double scale, std::size_t axis = 0);

/// m = j - (M+1)/2.
HalfInteger magnetic_number(int coord, int extent);

SignaturePhase signature(int extent);

/// Product of the per-axis signatures r1 r2 (r3).
SignaturePhase signature(const LatticeDims& dims);

SiteIndex mirror_site(const SiteIndex& site, const LatticeDims& dims);

/// t0 = pi / |J|.
double pst_time(double scale);

}  // namespace pft
