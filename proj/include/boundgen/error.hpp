#pragma once

#include <stdexcept>
#include <string>

namespace boundgen {

enum class ErrorCode {
  InvalidArgument,
  NotSL,
  NotCoprime,
  UnsupportedRing,
  FactorizationTooLarge,
  BadIndex,
  RingMismatch,
  DimMismatch,
  NotApplicable,
  IndexOutOfRange,
  MissingSubstitution,
  BadDictEntry,
  PreconditionViolated,
  NotHessenberg,
  BadIndices,
  BaseFactorizerFailed,
  NotPrime,
  DuplicatePrime,
  BadRegime,
  DegenerateGroup,
  BudgetExceeded,
  SchemaError,
  SelfCheckFailed,
};

const char* error_code_name(ErrorCode code) noexcept;

// All library failures are reported as boundgen::Error; code() identifies the
// condition, what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }
  // what() without the leading code name.
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

// Internal consistency checks that must never fire on valid input.
inline void ensure(bool cond, const char* what) {
  if (!cond)
    fail(ErrorCode::SelfCheckFailed, what);
}

}  // namespace boundgen
