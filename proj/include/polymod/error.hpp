#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polymod {

enum class ErrorKind {
  DegenerateAxis,
  LimitExceeded,
  InvalidArgument,
  ParseError,
  DegenerateDiagonal,
  OutsidePolytope,
  DegenerateTriangle,
  EmptyPolytope,
  NotRealizable,
  OnWall,
  NotSmallWeight,
  DimTooLarge,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateAxis: return "DegenerateAxis";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegenerateDiagonal: return "DegenerateDiagonal";
    case ErrorKind::OutsidePolytope: return "OutsidePolytope";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::EmptyPolytope: return "EmptyPolytope";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::OnWall: return "OnWall";
    case ErrorKind::NotSmallWeight: return "NotSmallWeight";
    case ErrorKind::DimTooLarge: return "DimTooLarge";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polymod
