#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace expmodel {

enum class ErrorKind {
  InvalidParameter,
  EmptyDataset,
  InvalidGrid,
  InvalidSchedule,
  ShapeMismatch,
  DegenerateVariance,
  OutOfDomain,
  ParseError,
  NumericalFailure,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  // Input/config errors as opposed to internal numerical trouble.
  [[nodiscard]] bool is_input_error() const noexcept { return kind_ != ErrorKind::NumericalFailure; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::InvalidSchedule: return "InvalidSchedule";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DegenerateVariance: return "DegenerateVariance";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

}  // namespace expmodel
