#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace syzcurve {

enum class ErrorCode {
  MixedFields,
  DivisionByZero,
  ReducibleMinpoly,
  DegreeUnsupported,
  ProvablyReducible,
  DegreeMismatch,
  SingularMatrix,
  SyntaxError,
  NotHomogeneous,
  UnknownSymbol,
  NotReduced,
  BudgetExceeded,
  RankMismatch,
  StabilizationFailure,
  ShapeContradiction,
  NotASyzygy,
  NotSingularAtOrigin,
  NonIsolated,
  PointNotOnCurve,
  PointNotSingular,
  FieldTooSmall,
  FieldTowerUnsupported,
  NotLineArrangement,
  InvalidComponent,
  DuplicateComponents,
  UnknownName,
  ConstraintViolated,
  DegeneratePoint,
  DuplicateLines,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry the byte offset into the parsed text. Callers that
// know the surrounding file fill in line/column.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  void set_location(std::size_t line, std::size_t column);
  const std::string& message() const { return message_; }

 private:
  std::size_t offset_;
  std::size_t line_ = 0;
  std::size_t column_ = 0;
  std::string message_;
};

}  // namespace syzcurve
