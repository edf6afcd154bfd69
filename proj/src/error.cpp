#include "argwb/error.hpp"

namespace argwb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownArgument: return "UnknownArgument";
    case ErrorCode::UnknownArgumentInAttack: return "UnknownArgumentInAttack";
    case ErrorCode::DuplicateArgumentId: return "DuplicateArgumentId";
    case ErrorCode::InvalidArgumentId: return "InvalidArgumentId";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CyclicSupport: return "CyclicSupport";
    case ErrorCode::SupportAttackOverlap: return "SupportAttackOverlap";
    case ErrorCode::UnrankedValue: return "UnrankedValue";
    case ErrorCode::InvalidAudience: return "InvalidAudience";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UndeclaredArgument: return "UndeclaredArgument";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::MissingCondition: return "MissingCondition";
    case ErrorCode::ConflictingExternal: return "ConflictingExternal";
    case ErrorCode::InvalidCase: return "InvalidCase";
    case ErrorCode::EditConflict: return "EditConflict";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::MissingSeparator: return "MissingSeparator";
    case ErrorCode::BadLine: return "BadLine";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IncompatibleTask: return "IncompatibleTask";
    case ErrorCode::UnknownSession: return "UnknownSession";
    case ErrorCode::RevisionConflict: return "RevisionConflict";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace argwb
