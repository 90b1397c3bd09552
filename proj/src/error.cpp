#include "grs/error.hpp"

namespace grs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::BadDiagonal: return "BadDiagonal";
    case ErrorKind::NormNotTwo: return "NormNotTwo";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::TargetNotEnumerable: return "TargetNotEnumerable";
    case ErrorKind::SeedNotRoot: return "SeedNotRoot";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::NameUnknown: return "NameUnknown";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace grs
