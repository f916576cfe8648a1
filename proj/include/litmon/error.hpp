#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace litmon {

enum class ErrorCode {
  InvalidArgument,
  InvalidEnumValue,
  InvalidRecord,
  DuplicateShortName,
  DanglingLink,
  UnknownRecord,
  UnknownEntity,
  UnknownDepth,
  UnknownField,
  MalformedRange,
  EntityInUse,
  VocabularyViolation,
  NotFound,
  ServiceUnavailable,
  MalformedResponse,
  EmptyCorpus,
  MissingOrdinal,
  IoFailure,
  BindFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace litmon
