#include "coxlat/error.hpp"

namespace coxlat {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::NotUnitriangular: return "NotUnitriangular";
    case ErrorCode::NeitherKind: return "NeitherKind";
    case ErrorCode::GorensteinViolation: return "GorensteinViolation";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NegativeDimension: return "NegativeDimension";
    case ErrorCode::RouteMismatch: return "RouteMismatch";
  }
  return "Unknown";
}

}  // namespace coxlat
