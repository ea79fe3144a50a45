#include "vacshift/errors.hpp"

namespace vacshift {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::SingularCutoff: return "SingularCutoff";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::TruncationRisk: return "TruncationRisk";
    case ErrorCode::ToleranceFailure: return "ToleranceFailure";
    case ErrorCode::PositivityBreach: return "PositivityBreach";
    case ErrorCode::GuardBandOverflow: return "GuardBandOverflow";
    case ErrorCode::UnboundedWindow: return "UnboundedWindow";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::FitFailure: return "FitFailure";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

bool Error::is_numerical_guard() const noexcept {
  switch (code_) {
    case ErrorCode::ToleranceFailure:
    case ErrorCode::PositivityBreach:
    case ErrorCode::GuardBandOverflow:
    case ErrorCode::GuardExceeded:
    case ErrorCode::FitFailure:
    case ErrorCode::TruncationRisk:
      return true;
    default:
      return false;
  }
}

}  // namespace vacshift
