#pragma once

#include <stdexcept>
#include <string>

namespace orbsum {

/// Failure codes for operations whose preconditions can be violated by
/// well-typed inputs. Violations found by validate() are data, not errors.
enum class ErrorCode {
  MaximalityViolation,
  IllegalSlide,
  NotTrivial,
  InvalidTree,
  HasVertexSums,
  Inefficient,
  NotATree,
  NotBlowable,
  ReattachmentImpossible,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MaximalityViolation: return "MaximalityViolation";
    case ErrorCode::IllegalSlide: return "IllegalSlide";
    case ErrorCode::NotTrivial: return "NotTrivial";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::HasVertexSums: return "HasVertexSums";
    case ErrorCode::Inefficient: return "Inefficient";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotBlowable: return "NotBlowable";
    case ErrorCode::ReattachmentImpossible: return "ReattachmentImpossible";
  }
  return "UnknownError";
}

}  // namespace orbsum
