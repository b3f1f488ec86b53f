#include "edr/error.hpp"

namespace edr {

const char* errorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnsupportedCapability: return "UnsupportedCapability";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ExponentTooLarge: return "ExponentTooLarge";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotTwoSidedUnimodular: return "NotTwoSidedUnimodular";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::ZeroC: return "ZeroC";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::ReductionFailed: return "ReductionFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(errorCodeName(code)) + ": " + message), code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t position, const std::string& message)
    : Error(code, message + " (at offset " + std::to_string(position) + ")"), position_(position) {}

}  // namespace edr
