#include "doctest.h"

#include <cmath>
#include <numbers>

#include "pft/core_algebra.hpp"
#include "pft/error.hpp"

using namespace pft;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("coupling profile values") {
  CHECK(coupling_profile(2, 1.0).values == std::vector<double>{0.5});

  const auto p4 = coupling_profile(4, 1.0).values;
  REQUIRE(p4.size() == 3);
  CHECK(p4[0] == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
  CHECK(p4[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p4[2] == p4[0]);

  const auto p3 = coupling_profile(3, 2.0).values;
  CHECK(p3[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(p3[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("coupling profile is a palindrome") {
  for (int m = 2; m <= 40; ++m) {
    const auto v = coupling_profile(m, 1.7).values;
    REQUIRE(v.size() == static_cast<std::size_t>(m - 1));
    for (std::size_t j = 0; j < v.size(); ++j) CHECK(v[j] == v[v.size() - 1 - j]);
  }
}

TEST_CASE("coupling profile errors") {
  CHECK(kind_of([] { coupling_profile(1, 1.0); }) == ErrorKind::InvalidExtent);
  CHECK(kind_of([] { coupling_profile(0, 1.0); }) == ErrorKind::InvalidExtent);
  CHECK(kind_of([] { coupling_profile(3, 0.0); }) == ErrorKind::DegenerateCoupling);
}

TEST_CASE("magnetic numbers") {
  CHECK(magnetic_number(1, 5) == HalfInteger::from_int(-2));
  CHECK(magnetic_number(5, 5) == HalfInteger::from_int(2));
  CHECK(magnetic_number(2, 4) == HalfInteger::from_twice(-1));
  CHECK(kind_of([] { magnetic_number(0, 4); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { magnetic_number(5, 4); }) == ErrorKind::IndexOutOfRange);

  for (int m = 1; m <= 9; ++m) {
    for (int j = 1; j <= m; ++j) CHECK(magnetic_number(m + 1 - j, m) == -magnetic_number(j, m));
  }
}

TEST_CASE("signature phases") {
  CHECK(signature(5).value() == Complex(1, 0));
  CHECK(signature(1).value() == Complex(1, 0));
  CHECK(signature(2).value() == Complex(0, -1));
  CHECK(signature(3).value() == Complex(-1, 0));

  for (int m = 1; m <= 20; ++m) CHECK(signature(m + 4) == signature(m));
  for (int m = 1; m <= 12; ++m) {
    const double angle = -std::numbers::pi * (m - 1) / 2;
    CHECK(std::abs(signature(m).value() - std::polar(1.0, angle)) < 1e-14);
  }
  CHECK(signature(LatticeDims{2, 3}) == signature(2) * signature(3));
}

TEST_CASE("mirror sites") {
  CHECK(mirror_site({1, 1}, LatticeDims{3, 4}) == SiteIndex{3, 4});
  CHECK(mirror_site({2, 2}, LatticeDims{3, 3}) == SiteIndex{2, 2});
  CHECK(mirror_site({1, 2, 3}, LatticeDims{2, 3, 4}) == SiteIndex{2, 2, 2});

  const LatticeDims dims{3, 4, 2};
  for (std::size_t i = 0; i < dims.site_count(); ++i) {
    const SiteIndex s = unflatten(i, dims);
    CHECK(mirror_site(mirror_site(s, dims), dims) == s);
    CHECK(flatten(s, dims) == i);
  }
  CHECK(kind_of([] { mirror_site({4, 1}, LatticeDims{3, 3}); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { mirror_site({1}, LatticeDims{3, 3}); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("lattice dims validation") {
  CHECK(kind_of([] { LatticeDims{}; }) == ErrorKind::InvalidExtent);
  CHECK(kind_of([] { LatticeDims({2, 2, 2, 2}); }) == ErrorKind::InvalidExtent);
  CHECK(kind_of([] { LatticeDims({2, 0}); }) == ErrorKind::InvalidExtent);
  CHECK(kind_of([] { LatticeDims{3, 1}.require_transferable(); }) == ErrorKind::InvalidExtent);
  CHECK(LatticeDims{2, 3, 4}.site_count() == 24);
}

TEST_CASE("transfer time") {
  CHECK(pst_time(1.0) == doctest::Approx(std::numbers::pi).epsilon(1e-16));
  CHECK(pst_time(2.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
  CHECK(pst_time(std::numbers::pi) == doctest::Approx(1.0).epsilon(1e-16));
  CHECK(pst_time(-2.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
  CHECK(kind_of([] { pst_time(0.0); }) == ErrorKind::DegenerateCoupling);
}

TEST_CASE("powers of i") {
  CHECK(i_power(0) == Complex(1, 0));
  CHECK(i_power(1) == Complex(0, 1));
  CHECK(i_power(-1) == Complex(0, -1));
  CHECK(i_power(-2) == Complex(-1, 0));
  CHECK(i_power(7) == Complex(0, -1));
}
