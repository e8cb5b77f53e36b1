#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gridhilbert {

enum class ErrorKind {
  EmptyArities,
  AritySmallerThanTwo,
  WeightOutOfRange,
  DegreeOutOfRange,
  PointNotInGrid,
  LengthMismatch,
  DimensionMismatch,
  DuplicateLabel,
  SetTooSmall,
  DuplicateEntries,
  BadPermutation,
  EmptyMultiset,
  ParseError,
  UnknownSuite,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Every domain failure in the library is reported through this type; the
/// kind name is what the CLI prints.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gridhilbert
