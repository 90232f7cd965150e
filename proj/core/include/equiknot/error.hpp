#pragma once

#include <stdexcept>
#include <string>

namespace equiknot {

enum class ErrorCode {
  // arc presentation validation
  CountMismatch,
  LoopArc,
  DegreeError,
  Disconnected,
  SyntaxError,
  NoValidRotation,
  // diagrams and invariants
  TooManyCrossings,
  NoGenericProjection,
  NotEmbedded,
  // realization
  InvalidParams,
  ApexImpossible,
  NoRootFound,
  KnotTypeChanged,
  RetriesExhausted,
  // composition
  NoEligibleArc,
  RemapCollision,
  // io
  IoError,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace equiknot
