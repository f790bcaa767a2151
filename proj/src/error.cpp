#include "pft/error.hpp"

namespace pft {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidExtent: return "invalid-extent";
    case ErrorKind::DegenerateCoupling: return "degenerate-coupling";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::UnsupportedSize: return "unsupported-size";
    case ErrorKind::RepresentationMismatch: return "representation-mismatch";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NotUnitary: return "not-unitary";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NumericalFailure: return "numerical-failure";
    case ErrorKind::DegenerateFunction: return "degenerate-function";
    case ErrorKind::WrongStatistics: return "wrong-statistics";
    case ErrorKind::OverlappingSupport: return "overlapping-support";
  }
  return "unknown";
}

}  // namespace pft
