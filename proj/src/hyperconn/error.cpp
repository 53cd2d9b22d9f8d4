#include "hyperconn/error.hpp"

namespace hyperconn {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::BadEdgeSize: return "BadEdgeSize";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::ConnectivityUndefined: return "ConnectivityUndefined";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::NotHypergraphic: return "NotHypergraphic";
    case ErrorCode::InfeasibleProfile: return "InfeasibleProfile";
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::VerdictMismatch: return "VerdictMismatch";
    case ErrorCode::DeltaMismatch: return "DeltaMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace hyperconn
