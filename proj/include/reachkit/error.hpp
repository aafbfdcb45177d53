#pragma once

#include <stdexcept>
#include <string>

namespace reachkit {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kControlBoundViolation,
  kDegenerateZeroPolynomial,
  kTooFewGenerators,
  kCombinatorialBudgetExceeded,
  kBudgetExceeded,
  kUnsupportedInitialSet,
  kZeroDirection,
  kDegenerateHull,
  kParseError,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the C API
// maps them one-to-one onto rk_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Throws Error(kDimensionMismatch) unless got == expected.
void require_dimension(std::size_t got, std::size_t expected, const char* what);

}  // namespace reachkit
