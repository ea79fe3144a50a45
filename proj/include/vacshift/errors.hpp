#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vacshift {

enum class ErrorCode {
  InvalidParameter,
  MissingParameter,
  SingularCutoff,
  DimensionMismatch,
  DimensionTooSmall,
  InvalidState,
  TruncationRisk,
  ToleranceFailure,
  PositivityBreach,
  GuardBandOverflow,
  UnboundedWindow,
  SingularDenominator,
  FitFailure,
  GuardExceeded,
  ConfigError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library. Numerical-guard failures are the ones
// for which is_numerical_guard() is true; the CLI maps them to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool is_numerical_guard() const noexcept;

 private:
  ErrorCode code_;
};

// Thrown by integrate() when a monitored breach is configured to be fatal.
class BreachError : public Error {
 public:
  BreachError(ErrorCode code, double time, const std::string& what)
      : Error(code, what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace vacshift
