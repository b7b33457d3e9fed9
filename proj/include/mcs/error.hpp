#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcs {

enum class ErrorCode {
  InvalidParameter,
  DuplicateId,
  DeadlineExceedsPeriod,
  NonMonotoneWcet,
  CriticalityAboveLambda,
  WcetExceedsDeadline,
  LevelOutOfRange,
  SyntaxError,
  UnknownTask,
  MinInterArrivalViolated,
  ExecTimeOutOfRange,
  InvalidDmcrTarget,
  SameTask,
  InconsistentInputs,
  ModelViolation,
  InvalidTarget,
  MalformedTrace,
  ParameterTooLarge,
  Infeasible,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Issue {
  ErrorCode code;
  std::optional<int> task;
  std::string message;
};

// Raised by the validators. Carries every problem found, in input order.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Issue> issues);

  const std::vector<Issue>& issues() const noexcept { return issues_; }
  bool has(ErrorCode code) const;

 private:
  std::vector<Issue> issues_;
};

}  // namespace mcs
