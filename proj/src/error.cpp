#include "reachkit/error.hpp"

namespace reachkit {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kControlBoundViolation: return "ControlBoundViolation";
    case ErrorCode::kDegenerateZeroPolynomial: return "DegenerateZeroPolynomial";
    case ErrorCode::kTooFewGenerators: return "TooFewGenerators";
    case ErrorCode::kCombinatorialBudgetExceeded: return "CombinatorialBudgetExceeded";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kUnsupportedInitialSet: return "UnsupportedInitialSet";
    case ErrorCode::kZeroDirection: return "ZeroDirection";
    case ErrorCode::kDegenerateHull: return "DegenerateHull";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void require_dimension(std::size_t got, std::size_t expected, const char* what) {
  if (got != expected) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " has dimension " + std::to_string(got) + ", expected " +
                    std::to_string(expected));
  }
}

}  // namespace reachkit
