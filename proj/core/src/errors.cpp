#include "syzcurve/errors.hpp"

namespace syzcurve {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ReducibleMinpoly: return "ReducibleMinpoly";
    case ErrorCode::DegreeUnsupported: return "DegreeUnsupported";
    case ErrorCode::ProvablyReducible: return "ProvablyReducible";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::StabilizationFailure: return "StabilizationFailure";
    case ErrorCode::ShapeContradiction: return "ShapeContradiction";
    case ErrorCode::NotASyzygy: return "NotASyzygy";
    case ErrorCode::NotSingularAtOrigin: return "NotSingularAtOrigin";
    case ErrorCode::NonIsolated: return "NonIsolated";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::PointNotSingular: return "PointNotSingular";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::FieldTowerUnsupported: return "FieldTowerUnsupported";
    case ErrorCode::NotLineArrangement: return "NotLineArrangement";
    case ErrorCode::InvalidComponent: return "InvalidComponent";
    case ErrorCode::DuplicateComponents: return "DuplicateComponents";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::DuplicateLines: return "DuplicateLines";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

ParseError::ParseError(ErrorCode code, const std::string& what, std::size_t offset)
    : Error(code, what + " at offset " + std::to_string(offset)), offset_(offset), message_(what) {}

void ParseError::set_location(std::size_t line, std::size_t column) {
  line_ = line;
  column_ = column;
}

}  // namespace syzcurve
