#pragma once

#include <stdexcept>
#include <string>

namespace hyperconn {

// Stable numbering: the C API exposes these values unchanged.
enum class ErrorCode : int {
  RankTooSmall = 1,
  ValueOutOfRange,
  EmptySequence,
  LengthMismatch,
  DuplicateEdge,
  BadEdgeSize,
  VertexOutOfRange,
  ConnectivityUndefined,
  TooFewVertices,
  InstanceTooLarge,
  BudgetExhausted,
  NotHypergraphic,
  InfeasibleProfile,
  SpecInvalid,
  VerdictMismatch,
  DeltaMismatch,
  InvalidArgument,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperconn
