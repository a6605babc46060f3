#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lozenge {

enum class ErrorKind {
  InvalidInput,
  PositionOutOfRange,
  BarrierOverlap,
  TooManyBarriers,
  NotSorted,
  Duplicate,
  GeometryMismatch,
  RegionTooLarge,
  ZeroDenominator,
  NotExact,
  IncompatibleClusters,
  NoDistinctAlphaBeta,
  TermBudgetExceeded,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library. `kind()` identifies the
/// failure class; `what()` carries a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorKind::BarrierOverlap: return "BarrierOverlap";
    case ErrorKind::TooManyBarriers: return "TooManyBarriers";
    case ErrorKind::NotSorted: return "NotSorted";
    case ErrorKind::Duplicate: return "Duplicate";
    case ErrorKind::GeometryMismatch: return "GeometryMismatch";
    case ErrorKind::RegionTooLarge: return "RegionTooLarge";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::IncompatibleClusters: return "IncompatibleClusters";
    case ErrorKind::NoDistinctAlphaBeta: return "NoDistinctAlphaBeta";
    case ErrorKind::TermBudgetExceeded: return "TermBudgetExceeded";
  }
  return "Unknown";
}

}  // namespace lozenge
