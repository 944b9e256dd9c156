#include "pwa/errors.hpp"

namespace pwa {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteMultiplier: return "NonFiniteMultiplier";
    case ErrorCode::NegativeOmega: return "NegativeOmega";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotBandlimited: return "NotBandlimited";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::NonPositiveT: return "NonPositiveT";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::KernelOrderMismatch: return "KernelOrderMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::MembershipViolation: return "MembershipViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace pwa
