#pragma once

#include <stdexcept>
#include <string>

namespace pwa {

enum class ErrorCode {
  NotSymmetric,
  NotPSD,
  NonFinite,
  NoConvergence,
  DimensionMismatch,
  NonFiniteMultiplier,
  NegativeOmega,
  ZeroVector,
  NotBandlimited,
  InvalidParams,
  InvalidOrder,
  NonPositiveT,
  InvalidConfig,
  OddOrder,
  OrderTooSmall,
  KernelOrderMismatch,
  IndexOutOfRange,
  InvalidBase,
  MembershipViolation,
  ParseError,
  BadDimension,
  UnsupportedFormat,
  IoError,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; the code identifies the failed contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pwa
