#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stratlab {

enum class ErrorCode {
  MalformedInput,
  InvariantViolation,
  LengthCap,
  DimensionMismatch,
  NonCoprime,
  NotSymmetric,
  InvalidPair,
  NotBijective,
  Contradiction,
  CellNotFound,
  Io,
  Internal,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "malformed-input";
    case ErrorCode::InvariantViolation: return "invariant-violation";
    case ErrorCode::LengthCap: return "length-cap";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::NonCoprime: return "non-coprime";
    case ErrorCode::NotSymmetric: return "not-symmetric";
    case ErrorCode::InvalidPair: return "invalid-pair";
    case ErrorCode::NotBijective: return "not-bijective";
    case ErrorCode::Contradiction: return "contradiction";
    case ErrorCode::CellNotFound: return "cell-not-found";
    case ErrorCode::Io: return "io";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

/// Library-wide exception. `code()` distinguishes caller mistakes
/// (malformed text, broken invariants) from internal consistency failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace stratlab
