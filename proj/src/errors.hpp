#pragma once

#include <stdexcept>
#include <string>

namespace oodq {

enum class ErrorCode {
  IoFailure,
  DuplicateClassName,
  CyclicInheritance,
  SchemaViolation,
  EmptyProject,
  DomainError,
  MissingBound,
  MalformedBody,
  UsageError,
};

class AnalysisError : public std::runtime_error {
public:
  AnalysisError(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw AnalysisError(code, message);
}

} // namespace oodq
