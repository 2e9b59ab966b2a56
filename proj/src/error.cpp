#include "orbigraph/error.hpp"

namespace orbigraph {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyMatrix: return "EmptyMatrix";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::RowSumMismatch: return "RowSumMismatch";
    case ErrorKind::SupportAsymmetry: return "SupportAsymmetry";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::PartitionMismatch: return "PartitionMismatch";
    case ErrorKind::NotEquitable: return "NotEquitable";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::NotGood: return "NotGood";
    case ErrorKind::ComponentQuotientMismatch: return "ComponentQuotientMismatch";
    case ErrorKind::InfeasibleDegrees: return "InfeasibleDegrees";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::RootFindingDidNotConverge: return "RootFindingDidNotConverge";
    case ErrorKind::NonIntegralCoefficients: return "NonIntegralCoefficients";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace orbigraph
