#include "oqbm/error.hpp"

namespace oqbm {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveDiffusion: return "NonPositiveDiffusion";
    case ErrorCode::NegativeRate: return "NegativeRate";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidInitialCondition: return "InvalidInitialCondition";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::DomainTooNarrow: return "DomainTooNarrow";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::NegativeArgument: return "NegativeArgument";
    case ErrorCode::NonPositiveTime: return "NonPositiveTime";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::DefectiveMatrix: return "DefectiveMatrix";
    case ErrorCode::StabilityViolation: return "StabilityViolation";
    case ErrorCode::GridUnderResolved: return "GridUnderResolved";
    case ErrorCode::TailNotDecayed: return "TailNotDecayed";
    case ErrorCode::WrongRegime: return "WrongRegime";
    case ErrorCode::ScaleMismatch: return "ScaleMismatch";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::UnstableStep: return "UnstableStep";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::UnknownFigure: return "UnknownFigure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace oqbm
