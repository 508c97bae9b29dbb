#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sq {

enum class ErrorCode {
  // Parameter validation.
  NonPositiveScale,
  EpsOutOfRange,
  ScaleRatioTooLarge,
  TaperOutOfRange,
  BendRadiusTooSmall,
  NonFiniteParameter,
  // Sampling and evaluation.
  InvalidConfig,
  WrongKind,
  NonFiniteResult,
  SampleCapExceeded,
  DegenerateNormal,
  // Metrics and I/O.
  TooFewPoints,
  IoError,
  ParseError,
};

/// Stable identifier for an error code, e.g. "EpsOutOfRange".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One violated parameter invariant.
struct Issue {
  ErrorCode code;
  std::string detail;
};

/// Thrown by validate(); carries every violated invariant, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Issue> issues);

  const std::vector<Issue>& issues() const noexcept { return issues_; }

 private:
  std::vector<Issue> issues_;
};

}  // namespace sq
