#include <gridhilbert/errors.hpp>

namespace gridhilbert {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyArities: return "EmptyArities";
    case ErrorKind::AritySmallerThanTwo: return "AritySmallerThanTwo";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::PointNotInGrid: return "PointNotInGrid";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::SetTooSmall: return "SetTooSmall";
    case ErrorKind::DuplicateEntries: return "DuplicateEntries";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::EmptyMultiset: return "EmptyMultiset";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

}  // namespace gridhilbert
