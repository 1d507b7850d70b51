#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxlat {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  NotSymmetric,
  ZeroConstantTerm,
  NonIntegralCoefficient,
  OrderMismatch,
  NotARoot,
  NotUnitriangular,
  NeitherKind,
  GorensteinViolation,
  UnknownName,
  NegativeDimension,
  RouteMismatch,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. The code is stable and is what the
/// CLI reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coxlat
