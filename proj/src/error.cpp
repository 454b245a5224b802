#include "boundgen/error.hpp"

namespace boundgen {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotSL: return "NotSL";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::FactorizationTooLarge: return "FactorizationTooLarge";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MissingSubstitution: return "MissingSubstitution";
    case ErrorCode::BadDictEntry: return "BadDictEntry";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotHessenberg: return "NotHessenberg";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::BaseFactorizerFailed: return "BaseFactorizerFailed";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DuplicatePrime: return "DuplicatePrime";
    case ErrorCode::BadRegime: return "BadRegime";
    case ErrorCode::DegenerateGroup: return "DegenerateGroup";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::SelfCheckFailed: return "SelfCheckFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code), detail_(detail) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace boundgen
