#include "sqsample/errors.hpp"

namespace sq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::EpsOutOfRange: return "EpsOutOfRange";
    case ErrorCode::ScaleRatioTooLarge: return "ScaleRatioTooLarge";
    case ErrorCode::TaperOutOfRange: return "TaperOutOfRange";
    case ErrorCode::BendRadiusTooSmall: return "BendRadiusTooSmall";
    case ErrorCode::NonFiniteParameter: return "NonFiniteParameter";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::NonFiniteResult: return "NonFiniteResult";
    case ErrorCode::SampleCapExceeded: return "SampleCapExceeded";
    case ErrorCode::DegenerateNormal: return "DegenerateNormal";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

namespace {

std::string join_issues(const std::vector<Issue>& issues) {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += to_string(issue.code);
    if (!issue.detail.empty()) {
      out += " (";
      out += issue.detail;
      out += ')';
    }
  }
  return out;
}

// The first issue's code stands in for the whole list.
ErrorCode leading_code(const std::vector<Issue>& issues) {
  return issues.empty() ? ErrorCode::NonFiniteParameter : issues.front().code;
}

}  // namespace

ValidationError::ValidationError(std::vector<Issue> issues)
    : Error(leading_code(issues), "invalid superquadric parameters: " + join_issues(issues)),
      issues_(std::move(issues)) {}

}  // namespace sq
