#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oqbm {

enum class ErrorCode {
  NonPositiveDiffusion,
  NegativeRate,
  NonFinite,
  InvalidInitialCondition,
  InvalidGrid,
  DomainTooNarrow,
  GridMismatch,
  NegativeArgument,
  NonPositiveTime,
  DegenerateParams,
  DefectiveMatrix,
  StabilityViolation,
  GridUnderResolved,
  TailNotDecayed,
  WrongRegime,
  ScaleMismatch,
  QuadratureNotConverged,
  UnstableStep,
  ConfigError,
  UnknownFigure,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace oqbm
