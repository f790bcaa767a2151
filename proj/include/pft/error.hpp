#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pft {

enum class ErrorKind {
  InvalidExtent,
  DegenerateCoupling,
  IndexOutOfRange,
  UnsupportedSize,
  RepresentationMismatch,
  DimensionMismatch,
  NotUnitary,
  InvalidArgument,
  NumericalFailure,
  DegenerateFunction,
  WrongStatistics,
  OverlappingSupport,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so front ends can map
/// it onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pft
