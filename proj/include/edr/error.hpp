#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edr {

enum class ErrorCode {
  MixedRings,
  DivisionByZero,
  UnsupportedCapability,
  InvalidParameters,
  ParseError,
  ExponentTooLarge,
  NotAUnit,
  IndexOutOfRange,
  DimensionMismatch,
  NotUnimodular,
  NotTwoSidedUnimodular,
  InvalidWitness,
  ZeroC,
  ZeroInput,
  HypothesisFailed,
  ReductionFailed,
};

const char* errorCodeName(ErrorCode code) noexcept;

/// Base exception for every failure reported by the library. The code is
/// stable and is what the CLI maps onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& message);

  /// Byte offset into the source text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace edr
