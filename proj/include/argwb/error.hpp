#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace argwb {

// Machine-readable error codes. The service layer reports these verbatim.
enum class ErrorCode {
  UnknownArgument,
  UnknownArgumentInAttack,
  DuplicateArgumentId,
  InvalidArgumentId,
  TooLarge,
  CyclicSupport,
  SupportAttackOverlap,
  UnrankedValue,
  InvalidAudience,
  SyntaxError,
  UndeclaredArgument,
  MissingAssignment,
  MissingCondition,
  ConflictingExternal,
  InvalidCase,
  EditConflict,
  KindMismatch,
  MissingSeparator,
  BadLine,
  SchemaError,
  IncompatibleTask,
  UnknownSession,
  RevisionConflict,
  OracleMismatch,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  // Byte offset (parsers) or 1-based line number (line-oriented formats).
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace argwb
