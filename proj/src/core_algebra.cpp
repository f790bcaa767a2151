#include "pft/core_algebra.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pft/error.hpp"

namespace pft {

namespace {

void check_extents(const std::vector<int>& extents) {
  if (extents.empty() || extents.size() > 3) {
    throw Error(ErrorKind::InvalidExtent,
                "lattice rank must be 1..3, got " + std::to_string(extents.size()));
  }
  for (int e : extents) {
    if (e < 1) {
      throw Error(ErrorKind::InvalidExtent, "lattice extent must be >= 1, got " + std::to_string(e));
    }
  }
}

}  // namespace

LatticeDims::LatticeDims(std::initializer_list<int> extents) : extents_(extents) {
  check_extents(extents_);
}

LatticeDims::LatticeDims(std::vector<int> extents) : extents_(std::move(extents)) {
  check_extents(extents_);
}

std::size_t LatticeDims::site_count() const noexcept {
  std::size_t n = 1;
  for (int e : extents_) n *= static_cast<std::size_t>(e);
  return n;
}

void LatticeDims::require_transferable() const {
  for (int e : extents_) {
    if (e < 2) {
      throw Error(ErrorKind::InvalidExtent,
                  "transfer requires every extent >= 2, got " + std::to_string(e));
    }
  }
}

void validate_site(const SiteIndex& site, const LatticeDims& dims) {
  if (site.coords.size() != dims.rank()) {
    throw Error(ErrorKind::IndexOutOfRange, "site has " + std::to_string(site.coords.size()) +
                                                " coordinates, lattice has rank " +
                                                std::to_string(dims.rank()));
  }
  for (std::size_t a = 0; a < dims.rank(); ++a) {
    if (site.coords[a] < 1 || site.coords[a] > dims.extent(a)) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "site coordinate " + std::to_string(site.coords[a]) + " outside 1.." +
                      std::to_string(dims.extent(a)) + " on axis " + std::to_string(a));
    }
  }
}

std::size_t flatten(const SiteIndex& site, const LatticeDims& dims) {
  validate_site(site, dims);
  std::size_t index = 0;
  for (std::size_t a = 0; a < dims.rank(); ++a) {
    index = index * static_cast<std::size_t>(dims.extent(a)) +
            static_cast<std::size_t>(site.coords[a] - 1);
  }
  return index;
}

SiteIndex unflatten(std::size_t index, const LatticeDims& dims) {
  if (index >= dims.site_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "flat site index " + std::to_string(index) +
                                                " >= site count " +
                                                std::to_string(dims.site_count()));
  }
  std::vector<int> coords(dims.rank());
  for (std::size_t a = dims.rank(); a-- > 0;) {
    const auto e = static_cast<std::size_t>(dims.extent(a));
    coords[a] = static_cast<int>(index % e) + 1;
    index /= e;
  }
  return SiteIndex(std::move(coords));
}

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Complex SignaturePhase::value() const { return i_power(quarter_turns); }

CouplingProfile coupling_profile(int extent, double scale, std::size_t axis) {
  if (extent < 2) {
    throw Error(ErrorKind::InvalidExtent,
                "coupling profile needs extent >= 2, got " + std::to_string(extent));
  }
  if (scale == 0.0) {
    throw Error(ErrorKind::DegenerateCoupling, "coupling scale J must be nonzero");
  }
  CouplingProfile profile{axis, scale, std::vector<double>(static_cast<std::size_t>(extent - 1))};
  for (int j = 1; j < extent; ++j) {
    profile.values[static_cast<std::size_t>(j - 1)] =
        scale * 0.5 * std::sqrt(static_cast<double>(j) * static_cast<double>(extent - j));
  }
  return profile;
}

HalfInteger magnetic_number(int coord, int extent) {
  if (extent < 1 || coord < 1 || coord > extent) {
    throw Error(ErrorKind::IndexOutOfRange, "coordinate " + std::to_string(coord) +
                                                " outside 1.." + std::to_string(extent));
  }
  return HalfInteger::from_twice(2 * coord - (extent + 1));
}

SignaturePhase signature(int extent) {
  // exp(-i pi (M-1)/2) = i^{-(M-1)}
  return {(((1 - extent) % 4) + 4) % 4};
}

SignaturePhase signature(const LatticeDims& dims) {
  SignaturePhase r{0};
  for (int e : dims.extents()) r = r * signature(e);
  return r;
}

SiteIndex mirror_site(const SiteIndex& site, const LatticeDims& dims) {
  validate_site(site, dims);
  SiteIndex out = site;
  for (std::size_t a = 0; a < dims.rank(); ++a) {
    out.coords[a] = dims.extent(a) - site.coords[a] + 1;
  }
  return out;
}

double pst_time(double scale) {
  if (scale == 0.0) {
    throw Error(ErrorKind::DegenerateCoupling, "transfer time undefined for J = 0");
  }
  return std::numbers::pi / std::abs(scale);
}

}  // namespace pft
