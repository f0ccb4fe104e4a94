#pragma once

#include <stdexcept>
#include <string>

namespace tamewild {

enum class ErrorCode {
  BoundExceeded,
  DegreeMismatch,
  NotASubgroup,
  ClassSetMismatch,
  NotAnAction,
  NotInertial,
  InvalidChain,
  InvalidParameters,
  NonPositiveNormalizer,
  NotFaithful,
  WrongArity,
  UnknownPreset,
  IntegrityFailure,
  NotSquarefreeModP,
  DegenerateLeadingCoefficient,
  Parse,
  Io,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::ClassSetMismatch: return "ClassSetMismatch";
    case ErrorCode::NotAnAction: return "NotAnAction";
    case ErrorCode::NotInertial: return "NotInertial";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NonPositiveNormalizer: return "NonPositiveNormalizer";
    case ErrorCode::NotFaithful: return "NotFaithful";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::IntegrityFailure: return "IntegrityFailure";
    case ErrorCode::NotSquarefreeModP: return "NotSquarefreeModP";
    case ErrorCode::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tamewild
