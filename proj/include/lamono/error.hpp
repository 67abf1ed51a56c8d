#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lamono {

enum class ErrorCode {
  ParseError,
  DuplicateLine,
  NotEssential,
  BadWeight,
  BadGcd,
  NegativeExponent,
  NotPolynomial,
  WeightedNotSupported,
  TrivialMonodromy,
  InfinityMonodromyTrivial,
  LengthMismatch,
  ConfigError,
  InternalError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateLine: return "DuplicateLine";
    case ErrorCode::NotEssential: return "NotEssential";
    case ErrorCode::BadWeight: return "BadWeight";
    case ErrorCode::BadGcd: return "BadGcd";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::WeightedNotSupported: return "WeightedNotSupported";
    case ErrorCode::TrivialMonodromy: return "TrivialMonodromy";
    case ErrorCode::InfinityMonodromyTrivial: return "InfinityMonodromyTrivial";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
/// InternalError means a cross-identity broke, i.e. a bug, never bad input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lamono
