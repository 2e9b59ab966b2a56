#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace orbigraph {

enum class ErrorKind {
  EmptyMatrix,
  NotSquare,
  NegativeEntry,
  RowSumMismatch,
  SupportAsymmetry,
  Disconnected,
  VertexOutOfRange,
  PartitionMismatch,
  NotEquitable,
  NotAnAutomorphism,
  NotGood,
  ComponentQuotientMismatch,
  InfeasibleDegrees,
  ConstructionFailed,
  RootFindingDidNotConverge,
  NonIntegralCoefficients,
  TooLarge,
  TooSmall,
  BudgetExceeded,
  SyntaxError,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind kind) noexcept;

// Location attached to an error: a matrix cell, a row, or a text position.
struct ErrorLocation {
  std::optional<std::size_t> row;
  std::optional<std::size_t> column;
  std::optional<std::size_t> line;
};

class OrbigraphError : public std::runtime_error {
 public:
  OrbigraphError(ErrorKind kind, const std::string& message, ErrorLocation where = {})
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind),
        where_(where) {}

  ErrorKind kind() const noexcept { return kind_; }
  const ErrorLocation& where() const noexcept { return where_; }

 private:
  ErrorKind kind_;
  ErrorLocation where_;
};

}  // namespace orbigraph
